import argparse
import math

from monomial_lab._constants import DEFAULT_ITERATIONS, DEFAULT_RESTARTS, DEFAULT_SEED, BlockClosure, HVariant
from monomial_lab.bounds import bound_names

FAMILIES = ("jx", "jxm", "jminus", "jplus", "jmn")
FORMATS = ("json", "jsonl", "csv")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _number(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None


def _number_list(text: str):
    return [_number(item) for item in text.split(",") if item.strip()]


def _int_list(text: str):
    return [int(float(item)) for item in text.split(",") if item.strip()]


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("run options")
    group.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Master seed (default: %(default)s)")
    group.add_argument(
        "--threads", type=_positive_int, default=None, help="Worker threads (default: MONOMIAL_LAB_THREADS or 1)"
    )
    group.add_argument("--out", default=None, help="Output path (default: stdout)")
    group.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: %(default)s)")
    group.add_argument("--max-elements", type=_positive_int, default=None, help="Enumeration cap")
    group.add_argument("-v", "--verbose", action="count", default=0, help="Log progress to stderr (-vv for debug)")
    return common


def _weights(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--weights", default="primes" if not required else None, required=required, help="primes | klog[:theta]"
    )


def _budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS, help="Random ascent starts")
    parser.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS, help="Ascent steps per start")
    parser.add_argument("--torus-grid", action="store_true", help="On r = inf, also use the FFT torus grid")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="monomial-lab",
        description="Multi-index enumeration, explicit bounds and numerical checks for monomial expansions.",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    enum = commands.add_parser("enum", parents=[common], help="List the indices of a family")
    enum.add_argument("--family", choices=FAMILIES, default="jx")
    _weights(enum, required=False)
    enum.add_argument("--x", type=_number)
    enum.add_argument("--y", type=_number)
    enum.add_argument("--m", type=int)
    enum.add_argument("--n", type=_positive_int, help="Number of variables for --family jmn")
    enum.add_argument("--margin", type=_number, default=0.0, help="Relative slack on x in membership tests")

    census = commands.add_parser("census", parents=[common], help="Exact size of a family and its size bound")
    census.add_argument("--family", choices=FAMILIES[:4], default="jx")
    _weights(census)
    census.add_argument("--x", type=_number, required=True)
    census.add_argument("--y", type=_number)
    census.add_argument("--m", type=int)
    census.add_argument("--c", type=_number, help="Constant of the J+ growth term")
    census.add_argument("--landau-c", type=_number, help="Constant of the Landau-type bound")
    census.add_argument("--margin", type=_number, default=0.0, help="Relative slack on x in membership tests")

    decompose = commands.add_parser("decompose", parents=[common], help="Split indices as (i, j)")
    _weights(decompose)
    decompose.add_argument("--x", type=_number, required=True)
    decompose.add_argument("--y", type=_number, required=True)
    decompose.add_argument("--index", action="append", required=True, help="Comma separated entries, repeatable")

    bound = commands.add_parser("bound", parents=[common], help="Evaluate a closed-form bound")
    bound.add_argument("name", choices=bound_names())
    for flag in ("--x", "--y", "--theta", "--C", "--c"):
        bound.add_argument(flag, type=_number)
    bound.add_argument("--m", type=int)
    bound.add_argument("--n", type=int)
    bound.add_argument("--r", default=None)
    bound.add_argument("--j-star-size", type=int)
    bound.add_argument("--m-max", type=int)
    bound.add_argument("--variant", choices=[v.value for v in HVariant])
    bound.add_argument("--constant", choices=("cmr", "geometric"))
    bound.add_argument("--weights", default=None, help="primes | klog[:theta]")
    mode = bound.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="One report as JSON (default)")
    mode.add_argument("--table", action="store_true", help="Sweep the --sweep grid and write CSV")
    bound.add_argument("--sweep", action="append", default=[], help="PARAM=v1,v2,... grid axis, repeatable")

    check = commands.add_parser("check", help="Verify an inequality numerically")
    checks = check.add_subparsers(dest="check", metavar="CHECK", required=True)
    for name in ("cauchy", "mixed", "thm-monomial"):
        sub = checks.add_parser(name, parents=[common])
        sub.add_argument("--poly", required=True, help="Polynomial JSON file, - for stdin")
        sub.add_argument("--r", required=True)
        sub.add_argument("--n", type=_positive_int, help="Dimension (default: largest variable)")
        _budget(sub)
        if name == "thm-monomial":
            sub.add_argument("--u", required=True, help="Point, e.g. vec:0.5,0.25 or n:-0.75:b=1.2:N=100")
            sub.add_argument("--indices", help="Index set as '1,2;2,3' (default: the indices of the polynomial)")
    reduced = checks.add_parser("reduced-inclusion", parents=[common])
    _weights(reduced)
    reduced.add_argument("--x", type=_number, required=True)
    reduced.add_argument("--m", type=int, required=True)
    reduced.add_argument("--y", type=_number)
    partition = checks.add_parser("kq-partition", parents=[common])
    _weights(partition)
    partition.add_argument("--x", type=_number, required=True)
    partition.add_argument("--y", type=_number, required=True)
    partition.add_argument("--fields", type=int, default=1, help="Random coefficient fields for the sum check")

    sidon = commands.add_parser("sidon", parents=[common], help="Certified lower bound of a Sidon-type constant")
    sidon.add_argument("--set", dest="index_set", required=True, help="powers:N | jmn:m,n | '1,1;2,2'")
    sidon.add_argument("--r", default="inf")
    sidon.add_argument("--seeds", type=_positive_int, default=200)

    probe = commands.add_parser("probe", help="Desk-scale experiments")
    probes = probe.add_subparsers(dest="probe", metavar="PROBE", required=True)
    blocks = probes.add_parser("blocks", parents=[common])
    blocks.add_argument("--u", required=True)
    _weights(blocks)
    blocks.add_argument("--x", type=_number, help="Cover weights up to x")
    blocks.add_argument("--base", type=_number, help="Block base (default: 2 for primes, e otherwise)")
    blocks.add_argument("--N-max", dest="N_max", type=int)
    blocks.add_argument("--closure", choices=[c.value for c in BlockClosure], default="right")
    blocks.add_argument("--degree", type=int)
    blocks.add_argument("--coeffs", choices=("ones", "signs", "multiplicity"), default="ones")
    trend = probes.add_parser("bohr-trend", parents=[common])
    trend.add_argument("--r", required=True)
    trend.add_argument("--ns", type=_int_list, default=[2**k for k in range(4, 13)])
    trend.add_argument("--m-max", type=int)
    envelope = probes.add_parser("kq-envelope", parents=[common])
    _weights(envelope)
    envelope.add_argument("--r", required=True)
    envelope.add_argument("--xs", type=_number_list, default=[10.0**k for k in range(2, 7)])
    envelope.add_argument("--y", type=_number)
    envelope.add_argument("--c", type=_number)
    envelope.add_argument("--variant", choices=[v.value for v in HVariant], default=HVariant.LOG.value)
    return parser


def default_base(weights: str) -> float:
    return 2.0 if weights.strip().lower() == "primes" else math.e
