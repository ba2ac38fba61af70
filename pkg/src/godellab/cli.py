"""Command-line surface and the JSON trace format.

One subcommand per library operation; every run writes either a text
summary or a JSON envelope {"command", "config", "result", "version"} to
stdout. Exit codes: 0 success, 2 invalid input or usage, 3 when a check
finds a counterexample or a certificate verdict is not divergence.
All code-sized numbers serialize as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__, arithmetization, encoding, lab, syntax

DEFAULT_TERMS = ["Sx0", "SSx0", "(x0+0)", "(x0*S0)"]


@dataclass
class RunConfig:
    scheme: str = "prime"
    bound: int = 1000
    max_steps: int = 8
    mu_cutoff: int = 5_000_000
    sub_reading: str = "recompute"
    format: str = "text"

    def to_json_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "bound": str(self.bound),
            "maxSteps": str(self.max_steps),
            "muCutoff": str(self.mu_cutoff),
            "subReading": self.sub_reading,
            "format": self.format,
        }


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scheme", choices=["prime", "beta"], default="prime")
    common.add_argument("--bound", type=_positive, default=1000)
    common.add_argument("--max-steps", type=_positive, default=8)
    common.add_argument("--mu-cutoff", type=_positive, default=5_000_000)
    common.add_argument("--sub-reading", choices=["recompute", "outer-num"],
                        default="recompute")
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(
        prog="godellab",
        description="encodings of a small arithmetic language and certified "
                    "checks over them",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common],
                       help="code of a term or formula")
    p.add_argument("text")
    p = sub.add_parser("decode", parents=[common],
                       help="text of a coded symbol sequence")
    p.add_argument("code", type=_nonnegative)
    p = sub.add_parser("numeral", parents=[common],
                       help="render the n-th numeral")
    p.add_argument("n", type=_nonnegative)
    p = sub.add_parser("beta", parents=[common],
                       help="projection beta(x, i)")
    p.add_argument("x", type=_nonnegative)
    p.add_argument("i", type=_nonnegative)
    p = sub.add_parser("seqnum", parents=[common],
                       help="least sequence number of the given entries")
    p.add_argument("entries", type=_nonnegative, nargs="*")
    p = sub.add_parser("sub", parents=[common],
                       help="case-defined substitution of a code into itself")
    p.add_argument("x", type=_nonnegative)
    p = sub.add_parser("sb", parents=[common],
                       help="substitute a sequence for a free variable, at "
                            "the level of prime-power codes")
    p.add_argument("x", type=_nonnegative)
    p.add_argument("v", type=_nonnegative)
    p.add_argument("y", type=_nonnegative)
    p = sub.add_parser("diag", parents=[common],
                       help="substitute the numeral of x itself for v in x")
    p.add_argument("x", type=_nonnegative)
    p.add_argument("v", type=_nonnegative)
    sub.add_parser("chain", parents=[common],
                   help="numeral-code chain with certified comparisons")
    sub.add_parser("lemma1", parents=[common],
                   help="scan: no p codes S followed by its own numeral")
    sub.add_parser("nonid", parents=[common],
                   help="scan the four no-fixed-point families")
    sub.add_parser("expand-seq", parents=[common],
                   help="slot-allocation growth certificate")
    sub.add_parser("expand-sub", parents=[common],
                   help="case-substitution growth certificate")
    sub.add_parser("expand-appendix", parents=[common],
                   help="numeral-code iteration certificate (prime coding)")
    p = sub.add_parser("arrays", parents=[common],
                       help="term/code arrays and diagonal analysis")
    p.add_argument("--seed-terms", metavar="FILE",
                   help="file with one canonical term per line (x0 free); "
                        "defaults to a built-in 4-term list")
    p.add_argument("--grid-size", type=_positive, default=4)
    p.add_argument("--sigma-row", type=_nonnegative, default=None)
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        scheme=args.scheme,
        bound=args.bound,
        max_steps=args.max_steps,
        mu_cutoff=args.mu_cutoff,
        sub_reading=args.sub_reading,
        format=args.format,
    )


def _scheme_from(config: RunConfig) -> encoding.EncodingScheme:
    return encoding.get_scheme(config.scheme, mu_cutoff=config.mu_cutoff)


def _load_terms(path: str | None) -> list[syntax.Term]:
    lines = DEFAULT_TERMS
    if path is not None:
        with open(path, "r", encoding="utf-8") as handle:
            lines = [ln.strip() for ln in handle if ln.strip()]
    return [syntax.parse_term(ln) for ln in lines]


def _run(args: argparse.Namespace, config: RunConfig) -> tuple[dict, str, int]:
    """Dispatch to the library; returns (result, text summary, exit code)."""
    scheme = _scheme_from(config)
    cmd = args.command

    if cmd == "encode":
        code = encoding.encode_node(scheme, syntax.parse(args.text))
        return {"code": str(code)}, str(code), 0

    if cmd == "decode":
        text = encoding.codes_to_text(scheme.decode_seq(args.code))
        return {"text": text}, text, 0

    if cmd == "numeral":
        text = syntax.render(syntax.numeral(args.n))
        return {"text": text}, text, 0

    if cmd == "beta":
        value = encoding.beta(args.x, args.i)
        return {"value": str(value)}, str(value), 0

    if cmd == "seqnum":
        value = encoding.seq_number(list(args.entries), cutoff=config.mu_cutoff)
        return {"code": str(value)}, str(value), 0

    if cmd == "sub":
        result = arithmetization.sub_with_numeral(
            args.x, scheme, reading=config.sub_reading)
        summary = (f"value {_magnitude_text(result.value)} via "
                   f"{len(result.steps)} case step(s), reading {result.reading}")
        return result.to_json_dict(), summary, 0

    if cmd == "sb":
        if config.scheme != "prime":
            raise ValueError("sb operates on prime-power codes; use --scheme prime")
        value = arithmetization.substitute_code(args.x, args.v, args.y)
        return {"code": str(value)}, str(value), 0

    if cmd == "diag":
        mag = arithmetization.diagonal_code(args.x, args.v, scheme)
        return {"value": mag.to_json_dict()}, _magnitude_text(mag), 0

    if cmd == "chain":
        report = lab.numeral_code_chain(scheme, config.max_steps)
        summary = (f"{len(report.entries)} entries, strictlyIncreasing="
                   f"{report.strictly_increasing}, verified {report.steps_verified}")
        return report.to_json_dict(), summary, 0 if report.strictly_increasing else 3

    if cmd == "lemma1":
        report = lab.check_lemma1(scheme, config.bound)
        summary = (f"checked {report.checked} values, "
                   f"{len(report.counterexamples)} counterexample(s)")
        return report.to_json_dict(), summary, 0 if not report.counterexamples else 3

    if cmd == "nonid":
        report = lab.check_non_identities(scheme, config.bound)
        summary = (f"{len(report.families)} families over bound {report.bound}, "
                   f"{report.counterexample_count} counterexample(s)")
        return report.to_json_dict(), summary, \
            0 if report.counterexample_count == 0 else 3

    if cmd == "expand-seq":
        cert = lab.build_sigma_seq(scheme, config.max_steps)
        return cert.to_json_dict(), _cert_text(cert), \
            0 if cert.verdict == lab.VERDICT_DIVERGES else 3

    if cmd == "expand-sub":
        cert = lab.build_sigma_sub(scheme, config.max_steps,
                                   reading=config.sub_reading)
        return cert.to_json_dict(), _cert_text(cert), \
            0 if cert.verdict == lab.VERDICT_DIVERGES else 3

    if cmd == "expand-appendix":
        if config.scheme != "prime":
            raise ValueError("the appendix iteration is defined over the prime "
                             "coding; use --scheme prime")
        cert = lab.appendix_expansion(config.max_steps)
        return cert.to_json_dict(), _cert_text(cert), \
            0 if cert.verdict == lab.VERDICT_DIVERGES else 3

    if cmd == "arrays":
        terms = _load_terms(args.seed_terms)
        bundle = lab.build_arrays(terms, args.grid_size, scheme)
        sigma_row = args.sigma_row if args.sigma_row is not None else len(terms) - 1
        diagonal = lab.analyze_diagonal(bundle, sigma_row)
        checked = mismatches = 0
        for i in range(len(terms)):
            for j in range(bundle.grid_size):
                denoted = lab.skeleton_denotation(scheme, bundle.skeleton_grid[i][j])
                cell = bundle.code_grid[i][j]
                if denoted is not None and cell.is_exact:
                    checked += 1
                    if denoted != cell.exact_value:
                        mismatches += 1
        result = {
            "bundle": bundle.to_json_dict(),
            "diagonal": diagonal,
            "denotationChecks": {"checked": checked, "mismatches": mismatches},
        }
        ok = mismatches == 0 and diagonal["noSlotSelfContainment"]
        summary = (f"{len(terms)}x{bundle.grid_size} grid, {checked} exact "
                   f"denotation checks, {mismatches} mismatch(es), diagonal row "
                   f"{sigma_row}: "
                   f"{'no slot self-containment' if diagonal['noSlotSelfContainment'] else 'UNRESOLVED SLOT'}")
        return result, summary, 0 if ok else 3

    raise ValueError(f"unknown command {cmd!r}")


def _magnitude_text(mag) -> str:
    if mag.is_exact:
        return str(mag.exact_value)
    return f">=2^{mag.low2}"


def _cert_text(cert) -> str:
    return (f"{cert.process}: verdict {cert.verdict}, {len(cert.steps)} step(s), "
            f"{cert.steps_verified} certified comparison(s)")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    config = _config_from(args)
    try:
        result, summary, code = _run(args, config)
    except (syntax.ParseError, encoding.InvalidCodeError, encoding.OutOfRangeError,
            encoding.SearchLimitExceeded, arithmetization.RecursionLimitExceeded,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if config.format == "json":
        envelope = {
            "command": args.command,
            "config": config.to_json_dict(),
            "result": result,
            "version": __version__,
        }
        print(json.dumps(envelope, indent=2))
    else:
        print(summary)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
