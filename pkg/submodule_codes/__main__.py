"""Command line front end for submodule codes."""
import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .bounds import (
    METHODS,
    BoundReport,
    bound_chain_ring,
    bound_singleton,
    bound_sphere,
    bound_zpm,
)
from .channel import (
    build_code,
    check_trapping_is_min_distance,
    run_trials,
)
from .codes import (
    Code,
    DecodeResult,
    decode_min_distance,
    decode_product,
    split_components,
)
from .constructions import (
    construct_product,
    construct_spread,
    construct_stacked,
    construct_tensor,
    optimality_table,
)
from .errors import FormatError, SubmoduleCodesError
from .formats import (
    MatrixFile,
    format_code,
    format_matrix,
    format_modules,
    load_config,
    matrix_to_dict,
    parse_code,
    parse_matrix,
    parse_ring,
    parse_row,
)
from .matrix import Matrix, is_row_echelon, member, row_echelon, rref
from .rings import Ring, classify
from .settings import ChannelConfig, TrappingConfig
from .submodule import Ambient, SubModule, enumerate_submodules, loss_and_error

_LOGGER = logging.getLogger()

Output = Tuple[str, Any]
"""Human text and machine (JSON) value of a command's result."""


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the exit status."""
    parser = _make_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.INFO, format=args.log_format
    )
    _LOGGER.debug(args)

    if args.handler is None:
        parser.print_usage(sys.stderr)
        return 2

    try:
        human, machine = args.handler(args)
    except FormatError as err:
        print(err, file=sys.stderr)
        return 2
    except OSError as err:
        print(f"{err.filename}: {err.strerror}", file=sys.stderr)
        return 2
    except SubmoduleCodesError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1

    if args.format == "machine":
        print(json.dumps(machine, indent=2))
    else:
        sys.stdout.write(human if human.endswith("\n") else human + "\n")

    return 0


def run() -> None:
    sys.exit(main())


# -----------------------------------------------------------------------------


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="submodule-codes")
    parser.add_argument(
        "--format",
        choices=("human", "machine"),
        default="human",
        help="Output text formats (human) or JSON (machine)",
    )
    parser.add_argument(
        "--seed", type=int, help="Seed for every random draw (overrides config files)"
    )
    parser.add_argument("--debug", action="store_true", help="Log DEBUG messages")
    parser.add_argument(
        "--log-format", default=logging.BASIC_FORMAT, help="Format for log messages"
    )
    parser.add_argument(
        "--version",
        action="version",
        version=__version__,
        help="Print version and exit",
    )
    parser.set_defaults(handler=None)

    commands = parser.add_subparsers(dest="command", metavar="command")

    # Echelon forms
    for name, handler, help_text in (
        ("ref", _do_ref, "Row-echelon form of a matrix file"),
        ("rref", _do_rref, "Reduced row-echelon form of a matrix file"),
        ("check-ref", _do_check_ref, "Answer YES or NO: is the matrix row-echelon?"),
        ("length", _do_length, "Length of the row module"),
    ):
        command = commands.add_parser(name, help=help_text)
        command.add_argument("matrix", help="Matrix file (- for stdin)")
        command.set_defaults(handler=handler)

    command = commands.add_parser("member", help="Is a vector in the row module?")
    command.add_argument("matrix", help="Matrix file (- for stdin)")
    command.add_argument("vector", help="Space-separated vector entries")
    command.set_defaults(handler=_do_member)

    # Two modules
    for name, handler, help_text in (
        ("distance", _do_distance, "Submodule distance d(M, N)"),
        ("loss-error", _do_loss_error, "Erasures and errors (rho, e) from M to N"),
        ("sum", _do_sum, "Basis of M + N"),
    ):
        command = commands.add_parser(name, help=help_text)
        command.add_argument("first", help="Matrix file of M")
        command.add_argument("second", help="Matrix file of N")
        command.set_defaults(handler=handler)

    command = commands.add_parser(
        "enumerate", help="Submodules of a given length (of the rows, or the ambient)"
    )
    command.add_argument("matrix", help="Matrix file; no rows means the whole ambient")
    command.add_argument("--length", type=int, required=True)
    command.set_defaults(handler=_do_enumerate)

    _add_construct(commands)
    _add_bound(commands)

    command = commands.add_parser("decode", help="Minimum distance decoding")
    command.add_argument("code", help="Code file")
    command.add_argument("received", help="Matrix file of the received module")
    command.add_argument(
        "--bounded",
        action="store_true",
        help="Report no_codeword outside the guaranteed correction radius",
    )
    command.add_argument(
        "--by-component",
        action="store_true",
        help="Decode each direct factor separately and reassemble",
    )
    command.set_defaults(handler=_do_decode)

    command = commands.add_parser("simulate", help="Monte-Carlo channel simulation")
    command.add_argument("config", help="key: value config file")
    command.add_argument(
        "--trials-report",
        action="store_true",
        help="Include every trial in human output",
    )
    command.set_defaults(handler=_do_simulate)

    command = commands.add_parser(
        "check-trapping", help="Compare error trapping with minimum distance decoding"
    )
    command.add_argument("config", help="key: value config file")
    command.set_defaults(handler=_do_check_trapping)

    command = commands.add_parser("classify", help="Chain decomposition of a ring")
    command.add_argument("ring", help="Ring spec, e.g. Z12, Zi5, product(Z2,Z3)")
    command.set_defaults(handler=_do_classify)

    command = commands.add_parser(
        "optimality", help="Spread cardinality against the chain ring bound"
    )
    command.add_argument("--n", type=int, required=True)
    command.add_argument("--h", type=int, required=True)
    command.add_argument(
        "--q", type=int, nargs="+", default=[2, 3, 4, 5, 7, 8, 9], help="Field orders"
    )
    command.set_defaults(handler=_do_optimality)

    return parser


def _add_construct(commands: Any) -> None:
    construct = commands.add_parser("construct", help="Build a code")
    kinds = construct.add_subparsers(dest="construction", metavar="construction")

    command = kinds.add_parser("spread", help="Partial spread code over a chain ring")
    command.add_argument("--ring", required=True)
    command.add_argument("--n", type=int, required=True)
    command.add_argument("--k", type=int, required=True)
    command.set_defaults(handler=_do_construct_spread)

    command = kinds.add_parser("tensor", help="Lift a Z_p code to a ring containing Z_p")
    command.add_argument("code", help="Code file over Z_p")
    command.add_argument("--ring", required=True, help="Target ring")
    command.set_defaults(handler=_do_construct_tensor)

    for name, handler in (
        ("product", _do_construct_product),
        ("stacked", _do_construct_stacked),
    ):
        command = kinds.add_parser(name, help=f"{name.title()} code over a product ring")
        command.add_argument("codes", nargs="+", help="Component code files")
        command.add_argument(
            "--ring", help="Target ring factoring as the component rings"
        )
        command.set_defaults(handler=handler)


def _add_bound(commands: Any) -> None:
    bound = commands.add_parser("bound", help="Upper bounds on code cardinality")
    kinds = bound.add_subparsers(dest="bound", metavar="bound")

    for name, handler in (
        ("singleton", _do_bound_singleton),
        ("sphere", _do_bound_sphere),
    ):
        command = kinds.add_parser(name, help=f"{name.title()}-like bound")
        command.add_argument("--ring", required=True)
        command.add_argument("--n", type=int, required=True)
        command.add_argument(
            "--ambient", help="Column ideal generators (default: the whole R^n)"
        )
        command.add_argument("--k", type=int, required=True)
        command.add_argument("--delta", type=int, required=True)
        command.add_argument("--method", choices=METHODS, default="auto")
        command.set_defaults(handler=handler)

    command = kinds.add_parser("chain", help="Bound for distance 2k over a chain ring")
    command.add_argument("--ring", required=True)
    command.add_argument("--n", type=int, required=True)
    command.add_argument("--k", type=int, required=True)
    command.add_argument(
        "--exponents", type=int, nargs="*", help="a_2 ... a_n (default: all zero)"
    )
    command.set_defaults(handler=_do_bound_chain)

    command = kinds.add_parser("zpm", help="Bounds over Z_p^m")
    for flag in ("--p", "--m", "--n", "--k", "--delta"):
        command.add_argument(flag, type=int, required=True)

    command.set_defaults(handler=_do_bound_zpm)


# -----------------------------------------------------------------------------


def _read(path: str) -> Tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "<stdin>"

    return Path(path).read_text(encoding="utf-8"), path


def _read_matrix(path: str) -> MatrixFile:
    text, source = _read(path)
    return parse_matrix(text, source)


def _read_module(path: str) -> SubModule:
    return _read_matrix(path).module


def _read_code(path: str) -> Code:
    text, source = _read(path)
    return parse_code(text, source)


def _ring_arg(text: str) -> Ring:
    return parse_ring(text, source="--ring")


def _seed(args: argparse.Namespace, config: Any) -> Any:
    if args.seed is None:
        return config

    return dataclasses.replace(config, seed=args.seed)


def _echelon_output(matrix: Matrix, ambient: Ambient) -> Output:
    return format_matrix(matrix, ambient), matrix_to_dict(matrix)


def _do_ref(args: argparse.Namespace) -> Output:
    parsed = _read_matrix(args.matrix)
    return _echelon_output(row_echelon(parsed.matrix).base, parsed.ambient)


def _do_rref(args: argparse.Namespace) -> Output:
    parsed = _read_matrix(args.matrix)
    return _echelon_output(rref(parsed.matrix).base, parsed.ambient)


def _do_check_ref(args: argparse.Namespace) -> Output:
    verdict = is_row_echelon(_read_matrix(args.matrix).matrix)
    if verdict.is_echelon:
        return "YES", {"is_echelon": True}

    return f"NO: {verdict.reason}", {"is_echelon": False, "reason": verdict.reason}


def _do_length(args: argparse.Namespace) -> Output:
    length = _read_module(args.matrix).length
    return str(length), length


def _do_member(args: argparse.Namespace) -> Output:
    parsed = _read_matrix(args.matrix)
    vector = parse_row(parsed.ring, args.vector, source="vector")
    membership = member(vector, row_echelon(parsed.matrix))
    machine: Dict[str, Any] = {"contained": membership.contained}
    if not membership.contained:
        return "NO", machine

    coefficients = [parsed.ring.format_element(c) for c in membership.coefficients]
    machine["coefficients"] = coefficients
    return "YES\ncoefficients: " + " ".join(coefficients), machine


def _do_distance(args: argparse.Namespace) -> Output:
    distance = _read_module(args.first).distance(_read_module(args.second))
    return str(distance), distance


def _do_loss_error(args: argparse.Namespace) -> Output:
    rho, e = loss_and_error(_read_module(args.first), _read_module(args.second))
    return f"rho: {rho}\ne: {e}", {"rho": rho, "e": e}


def _do_sum(args: argparse.Namespace) -> Output:
    total = _read_module(args.first) + _read_module(args.second)
    return _echelon_output(total.matrix, total.ambient)


def _do_enumerate(args: argparse.Namespace) -> Output:
    parsed = _read_matrix(args.matrix)
    within = parsed.module if parsed.matrix.rows else None
    modules = enumerate_submodules(parsed.ambient, args.length, within=within)
    human = f"# {len(modules)} submodule(s) of length {args.length}\n"
    if modules:
        human += format_modules(parsed.ambient, modules)

    return human, {
        "count": len(modules),
        "modules": [matrix_to_dict(module.matrix) for module in modules],
    }


# -----------------------------------------------------------------------------


def _code_output(code: Code) -> Output:
    text = f"# {len(code)} word(s), k={code.k}\n" + format_code(code)
    return text, {
        "ring": code.ring.spec,
        "n": code.n,
        "k": code.k,
        "size": len(code),
        "words": [matrix_to_dict(word.matrix) for word in code.words],
    }


def _do_construct_spread(args: argparse.Namespace) -> Output:
    return _code_output(construct_spread(_ring_arg(args.ring), args.n, args.k))


def _do_construct_tensor(args: argparse.Namespace) -> Output:
    return _code_output(construct_tensor(_read_code(args.code), _ring_arg(args.ring)))


def _product_like(
    args: argparse.Namespace, construct: Callable[..., Code]
) -> Output:
    codes = [_read_code(path) for path in args.codes]
    target = _ring_arg(args.ring) if args.ring else None
    return _code_output(construct(codes, target))


def _do_construct_product(args: argparse.Namespace) -> Output:
    return _product_like(args, construct_product)


def _do_construct_stacked(args: argparse.Namespace) -> Output:
    return _product_like(args, construct_stacked)


# -----------------------------------------------------------------------------


def _ambient_arg(args: argparse.Namespace) -> Ambient:
    ring = _ring_arg(args.ring)
    if not args.ambient:
        return Ambient.full(ring, args.n)

    return Ambient(
        ring=ring,
        n=args.n,
        column_ideals=parse_row(ring, args.ambient, source="--ambient"),
    )


def _do_bound_singleton(args: argparse.Namespace) -> Output:
    value = bound_singleton(_ambient_arg(args), args.k, args.delta, args.method)
    return str(value), value


def _do_bound_sphere(args: argparse.Namespace) -> Output:
    value = bound_sphere(_ambient_arg(args), args.k, args.delta, args.method)
    return str(value), value


def _do_bound_chain(args: argparse.Namespace) -> Output:
    value = bound_chain_ring(_ring_arg(args.ring), args.n, args.k, args.exponents)
    return str(value), value


def _format_bound_report(report: BoundReport) -> str:
    lines = []
    for entry in report.entries:
        value = str(entry.value) if entry.applicable else "n/a"
        note = f"  # {entry.note}" if entry.note else ""
        lines.append(f"{entry.name}: {value}{note}")

    lines.append(f"bound: {report.value}")
    return "\n".join(lines)


def _do_bound_zpm(args: argparse.Namespace) -> Output:
    report = bound_zpm(args.p, args.m, args.n, args.k, args.delta)
    return _format_bound_report(report), report.to_dict()


# -----------------------------------------------------------------------------


def _result_to_dict(result: DecodeResult) -> Dict[str, Any]:
    return {
        "status": result.status.value,
        "distance": result.distance,
        "index": result.index,
        "certified": result.certified,
        "second_distance": result.second_distance,
        "word": None if result.word is None else matrix_to_dict(result.word.matrix),
        "components": [_result_to_dict(part) for part in result.components],
    }


def _format_result(result: DecodeResult, prefix: str = "") -> List[str]:
    lines = [
        f"{prefix}status: {result.status.value}",
        f"{prefix}distance: {result.distance}",
    ]
    if result.index is not None:
        lines.append(f"{prefix}index: {result.index + 1}")
        lines.append(f"{prefix}certified: {'yes' if result.certified else 'no'}")

    return lines


def _do_decode(args: argparse.Namespace) -> Output:
    code = _read_code(args.code)
    received = _read_module(args.received)

    if args.by_component:
        result = decode_product(split_components(code), received, bounded=args.bounded)
    else:
        result = decode_min_distance(code, received, bounded=args.bounded)

    lines = _format_result(result)
    for component_idx, part in enumerate(result.components):
        lines.extend(_format_result(part, prefix=f"component {component_idx + 1} "))

    if result.word is not None:
        lines.append(format_matrix(result.word.matrix, code.ambient).rstrip("\n"))

    return "\n".join(lines), _result_to_dict(result)


def _do_simulate(args: argparse.Namespace) -> Output:
    text, source = _read(args.config)
    config: ChannelConfig = _seed(args, load_config(text, ChannelConfig, source))
    ring = parse_ring(config.ring, source=source)

    if config.code:
        code_path = Path(config.code)
        if not code_path.is_absolute() and (source != "<stdin>"):
            code_path = Path(source).parent / code_path

        code = _read_code(str(code_path))
    else:
        code = build_code(config, ring)

    report = run_trials(config, code)
    lines = [
        f"trials: {report.trials}",
        f"successes: {report.successes}",
        f"certified successes: {report.certified_successes}",
        f"success rate: {report.success_rate:.4f}",
        f"certified success rate: {report.certified_success_rate:.4f}",
        f"mean rho: {report.mean_rho:.4f}",
        f"mean e: {report.mean_e:.4f}",
    ]
    if args.trials_report:
        lines.append("# trial word rho e status decoded")
        for trial in report.reports:
            decoded = "-" if trial.decoded_index is None else str(trial.decoded_index)
            lines.append(
                f"{trial.trial} {trial.word_index} {trial.rho} {trial.e} "
                f"{trial.status} {decoded}"
            )

    return "\n".join(lines), report.to_dict()


def _do_check_trapping(args: argparse.Namespace) -> Output:
    text, source = _read(args.config)
    config: TrappingConfig = _seed(args, load_config(text, TrappingConfig, source))
    report = check_trapping_is_min_distance(parse_ring(config.ring, source=source), config)
    lines = [
        f"codebook size: {report.codebook_size}",
        f"instances: {report.instances}",
        f"comparisons: {report.comparisons}",
        f"violations: {report.violations}",
        f"trap mismatches: {report.trap_mismatches}",
    ]
    return "\n".join(lines), report.to_dict()


def _do_classify(args: argparse.Namespace) -> Output:
    ring = parse_ring(args.ring, source="ring")
    structure = classify(ring)
    components = [
        f"[char {component.modulus}, q {component.q}, e {component.e}]"
        for component in structure.components
    ]
    idempotents = [ring.format_element(a) for a in ring.idempotents()]
    lines = [
        f"ring: {ring.spec}",
        f"size: {ring.size}",
        f"length: {structure.length}",
        f"chain: {'yes' if structure.is_chain else 'no'}",
        f"field: {'yes' if structure.is_field else 'no'}",
        "components: " + " x ".join(components),
        "idempotents: " + " ".join(idempotents),
    ]
    if structure.square_roots is not None:
        lines.append(
            "square roots of -1: " + " ".join(str(s) for s in structure.square_roots)
        )

    return "\n".join(lines), {
        "ring": ring.spec,
        "size": ring.size,
        "length": structure.length,
        "chain": structure.is_chain,
        "field": structure.is_field,
        "components": [dataclasses.asdict(c) for c in structure.components],
        "idempotents": idempotents,
        "square_roots": (
            None if structure.square_roots is None else list(structure.square_roots)
        ),
    }


def _do_optimality(args: argparse.Namespace) -> Output:
    table = optimality_table(args.q, args.n, args.h)
    lines = ["# q size bound ratio"]
    lines.extend(
        f"{row.q} {row.cardinality} {row.bound} {row.ratio:.4f}" for row in table
    )
    return "\n".join(lines), [
        {
            "q": row.q,
            "size": row.cardinality,
            "bound": row.bound,
            "ratio": row.ratio,
        }
        for row in table
    ]


# -----------------------------------------------------------------------------

if __name__ == "__main__":
    run()
