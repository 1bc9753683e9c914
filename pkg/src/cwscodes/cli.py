"""Command line front end.

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from cwscodes import io
from cwscodes.bridge import (
    extract_stabilizer_presentation,
    is_stabilizer_code,
    stabilizer_to_cws,
)
from cwscodes.encoder import cws_encoder, input_qubits, simulate
from cwscodes.graph import to_standard_form
from cwscodes.search import build_problem, family, search_clique, ssw_code
from cwscodes.verify import (
    MAX_STATEVECTOR_QUBITS,
    build_statevector,
    check_detection,
    distance,
    kl_oracle,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _read_json(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _load(path: str, parser):
    try:
        return parser(_read_json(path))
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: invalid content: {exc}") from exc


def _load_code(path: str):
    if path.startswith("builtin:"):
        try:
            return io.load_builtin_code(path.split(":", 1)[1])
        except KeyError as exc:
            raise InputError(str(exc)) from exc
    return _load(path, io.code_from_dict)


def _load_graph(source: str):
    if source.startswith("family:"):
        parts = source.split(":")
        if len(parts) != 3:
            raise InputError("graph shorthand is family:<kind>:<n>")
        try:
            return family(parts[1], int(parts[2]))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    data = _read_json(source)
    try:
        return io.graph_from_dict(data.get("graph", data))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{source}: invalid graph: {exc}") from exc


def _emit(path: str | None, payload: dict) -> None:
    if path is None:
        return
    text = io.dumps(payload)
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_verify(args) -> int:
    code = _load_code(args.code)
    d = args.distance or code.claimed_distance
    if d is None:
        dist = distance(code, args.max_weight or code.n)
        print(f"distance = {dist}")
        return EXIT_OK
    if d < 2:
        print("claimed distance < 2: nothing to detect")
        return EXIT_OK
    report = check_detection(code, d - 1)
    payload = {"K": code.K, "n": code.n, "claimed_distance": d, "report": report.to_dict()}
    if not report.passed:
        print(f"FAIL: error {report.failing_error} ({report.failure_kind.value}) of weight "
              f"{report.failing_error.weight} is not detected")
        payload["verdict"] = "fail"
        _emit(args.emit, payload)
        return EXIT_FAIL
    dist = distance(code, min(d, code.n))
    kind = "degenerate" if report.degenerate else "nondegenerate"
    print(f"(({code.n},{code.K},{d})) detects all errors of weight <= {d - 1}")
    print(f"distance = {dist}, {kind}")
    payload["distance"] = str(dist)
    payload["verdict"] = "pass"
    status = EXIT_OK
    if args.oracle:
        if code.n > MAX_STATEVECTOR_QUBITS:
            raise InputError(f"--oracle needs n <= {MAX_STATEVECTOR_QUBITS}")
        kl = kl_oracle(code, d - 1)
        agree = kl.passed() == report.passed
        print(f"oracle max violation = {kl.max_violation:.3e} ({'agrees' if agree else 'DISAGREES'})")
        payload["oracle_max_violation"] = kl.max_violation
        if not agree:
            payload["verdict"] = "oracle-disagreement"
            status = EXIT_FAIL
    _emit(args.emit, payload)
    return status


def cmd_distance(args) -> int:
    code = _load_code(args.code)
    dist = distance(code, args.max_weight or code.n)
    print(f"distance = {dist}")
    _emit(args.emit, {"distance": dist.value, "exact": dist.exact})
    return EXIT_OK


def cmd_search(args) -> int:
    g = _load_graph(args.graph)
    problem = build_problem(g, args.distance)
    mode = "heuristic" if args.heuristic else "exact"
    try:
        result = search_clique(problem, mode, budget=args.budget, seed=args.seed, target=args.target)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    status = "proved maximum" if result.exact else "best found"
    print(f"K = {result.K} ({status}, {mode}, {result.elapsed:.2f} s)")
    _emit(args.emit, io.code_to_dict(result.to_code()))
    return EXIT_OK


def cmd_family(args) -> int:
    try:
        g = family(args.kind, args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = io.graph_to_dict(g)
    sys.stdout.write(io.dumps(payload))
    _emit(args.emit, payload)
    return EXIT_OK


def cmd_ssw(args) -> int:
    try:
        code = ssw_code(args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(f"(({code.n},{code.K},2)) on the star graph")
    _emit(args.emit, io.code_to_dict(code))
    return EXIT_OK


def cmd_to_standard_form(args) -> int:
    stab, words = _load(args.input, io.cws_presentation_from_dict)
    try:
        code, circuit = to_standard_form(stab, words)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = io.code_to_dict(code)
    payload["local_clifford"] = [list(g) for g in circuit.gates]
    print(f"standard form: n = {code.n}, K = {code.K}, {len(circuit)} local gates")
    _emit(args.emit or "-", payload)
    return EXIT_OK


def cmd_from_stabilizer(args) -> int:
    presentation = _load(args.input, io.presentation_from_dict)
    stab, words = stabilizer_to_cws(presentation)
    code, _ = to_standard_form(stab, words)
    print(f"[{presentation.n},{presentation.k}] stabilizer code -> CWS code with K = {code.K}")
    _emit(args.emit or "-", io.code_to_dict(code))
    return EXIT_OK


def cmd_is_stabilizer(args) -> int:
    code = _load_code(args.code)
    ok, k = is_stabilizer_code(code)
    if ok:
        print(f"stabilizer code: [{code.n},{k}]")
        _emit(args.emit, extract_stabilizer_presentation(code).to_dict())
    else:
        print(f"not a stabilizer code (codewords not closed under XOR, K = {code.K})")
    return EXIT_OK


def cmd_encode(args) -> int:
    code = _load_code(args.code)
    circuit = cws_encoder(code)
    print(f"encoder: {len(circuit.gates)} gates "
          f"({circuit.count('H')} H, {circuit.count('CZ')} CZ, {circuit.count('CX')} CX, "
          f"{circuit.count('LOOKUP')} LOOKUP)")
    status = EXIT_OK
    if args.oracle:
        if code.n > MAX_STATEVECTOR_QUBITS:
            raise InputError(f"--oracle needs n <= {MAX_STATEVECTOR_QUBITS}")
        expected = build_statevector(code)
        worst = max(
            1 - abs(expected[i].conj() @ simulate(circuit, i)) ** 2 for i in range(code.K)
        )
        print(f"worst infidelity = {worst:.3e}")
        if worst > 1e-10:
            status = EXIT_FAIL
    _emit(args.emit or "-", circuit.to_dict(input_qubits(code.K)))
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cwscodes", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=1,
                        help="parallelism cap (computations currently run single-threaded)")
    sub = parser.add_subparsers(dest="command", required=True)

    def code_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("code", help="code JSON path, '-' for stdin, or builtin:<name>")
        p.add_argument("--emit", metavar="PATH")
        p.set_defaults(func=func)
        return p

    p = code_cmd("verify", cmd_verify, "check detection up to the claimed distance")
    p.add_argument("--distance", type=int)
    p.add_argument("--max-weight", type=int)
    p.add_argument("--oracle", action="store_true", help="cross-check with the statevector oracle")

    p = code_cmd("distance", cmd_distance, "compute the minimum distance")
    p.add_argument("--max-weight", type=int, help="largest weight to try")

    p = sub.add_parser("search", help="clique search for codewords on a graph")
    p.add_argument("--graph", required=True, help="graph/code JSON path or family:<kind>:<n>")
    p.add_argument("--distance", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--heuristic", action="store_true")
    p.add_argument("--budget", type=float, default=60.0, help="seconds")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target", type=int, help="stop the heuristic once K reaches this")
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("family", help="print a family graph as JSON")
    p.add_argument("kind", choices=["ring", "double_ring", "star"])
    p.add_argument("n", type=int)
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("ssw", help="build the distance-two code on the star graph")
    p.add_argument("n", type=int)
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(func=cmd_ssw)

    p = sub.add_parser("to-standard-form", help="reduce stabilizer + word operators")
    p.add_argument("input")
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(func=cmd_to_standard_form)

    p = sub.add_parser("from-stabilizer", help="stabilizer presentation to CWS code")
    p.add_argument("input")
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(func=cmd_from_stabilizer)

    code_cmd("is-stabilizer", cmd_is_stabilizer, "test whether a CWS code is additive")

    p = code_cmd("encode", cmd_encode, "synthesize an encoding circuit")
    p.add_argument("--oracle", action="store_true", help="verify by simulation")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
