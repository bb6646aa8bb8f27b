import logging

from monomial_lab._settings import LOGGER


def enable_logging(level="info", stream=None):
    """Enable logging output for monomial_lab.

    Args:
        level (str or int, optional): Logging level (e.g., "info", "debug", logging.INFO).
            String (case-insensitive) or int accepted. Defaults to "info".
        stream (file-like, optional): Stream for logging output. If given, the
            package handler is replaced by one writing to it. Defaults to the
            current handler (stderr).

    Example:
        import monomial_lab as ml
        ml.enable_logging("debug")
    """
    if isinstance(level, str):
        level = getattr(logging, level.strip().upper(), logging.INFO)

    if stream is not None:
        formatter = LOGGER.handlers[0].formatter if LOGGER.handlers else None
        LOGGER.handlers.clear()
        handler = logging.StreamHandler(stream)
        if formatter is not None:
            handler.setFormatter(formatter)
        LOGGER.addHandler(handler)
    LOGGER.setLevel(level)


def disable_logging():
    """Silence everything below ERROR."""
    LOGGER.setLevel(logging.ERROR)


# Alias for discoverability
set_verbosity = enable_logging
