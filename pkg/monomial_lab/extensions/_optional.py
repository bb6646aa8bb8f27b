import importlib

from monomial_lab._settings import LOGGER


class OptionalModule:
    """Lazy handle on a module that may not be installed.

    Attribute access is forwarded to the module when it imported; otherwise
    it raises ``ImportError`` naming the missing package. ``available`` tells
    callers which path to take.
    """

    def __init__(self, module_name, install_hint=None):
        self.module_name = module_name
        self.install_hint = install_hint or f"pip install {module_name}"
        self.module = None
        try:
            self.module = importlib.import_module(module_name)
        except ImportError:
            LOGGER.debug(f"Optional module {module_name} not found.")

    @property
    def available(self) -> bool:
        return self.module is not None

    def __getattr__(self, item):
        if self.module is not None:
            return getattr(self.module, item)
        raise ImportError(f"Optional module '{self.module_name}' is not installed ({self.install_hint}).")
