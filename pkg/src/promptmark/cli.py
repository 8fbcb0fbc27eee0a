"""Command-line surface for the educator workflow: encode a brief, verify
it from the distribution channel, and search submissions at grading time.

Data flows on stdout; diagnostics (normalization reports, warnings,
mismatch details) go to stderr so pipes stay clean.  All I/O is UTF-8
with no BOM emitted; an input BOM is tolerated and stripped.

Exit codes: 0 success/affirmative, 1 negative result (verify mismatch,
scan hits with --fail-on-hit, token mismatch), 2 usage error, 3 I/O error.
"""

import argparse
import os
import sys
from pathlib import Path

from . import codec, gauntlet, normalizer, placement, presets_auth, scanner

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_IO = 3

KEY_FILE_ENV = "PROMPTMARK_KEY_FILE"


def _read_text(source: str) -> str:
    if source == "-":
        data = sys.stdin.buffer.read().decode("utf-8")
    else:
        data = Path(source).read_text(encoding="utf-8")
    return data.removeprefix("\ufeff")


def _write_text(sink: str | None, text: str) -> None:
    if sink is None or sink == "-":
        sys.stdout.buffer.write(text.encode("utf-8"))
        sys.stdout.buffer.flush()
    else:
        Path(sink).write_text(text, encoding="utf-8")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _report_normalization(label: str, rep: normalizer.NormalizationReport) -> None:
    if rep.folded_count or rep.dropped_count:
        _note(f"{label}: folded {rep.folded_count} code point(s), "
              f"dropped {rep.dropped_count} unencodable code point(s)")
        for offset, cp in rep.dropped_samples:
            _note(f"  dropped U+{cp:04X} at offset {offset}")


def _load_key(args) -> bytes:
    path = args.key_file or os.environ.get(KEY_FILE_ENV)
    if not path:
        raise ValueError(f"no secret key: pass --key-file or set {KEY_FILE_ENV}")
    return Path(path).read_bytes().strip()


def _metadata_from(args) -> presets_auth.AssignmentMetadata:
    return presets_auth.AssignmentMetadata(
        course=args.course, term=args.term, section=args.section,
        assignment_id=args.assignment_id, key_id=args.key_id)


def cmd_encode(args) -> int:
    sources = [s for s in (args.preset, args.payload, args.payload_file) if s is not None]
    if len(sources) != 1:
        _note("exactly one of --preset, --payload, --payload-file is required")
        return EXIT_USAGE
    if args.preset is not None:
        payload_raw = presets_auth.get_preset(args.preset).payload_text
    elif args.payload_file is not None:
        payload_raw = _read_text(args.payload_file)
    else:
        payload_raw = args.payload

    visible_rep = normalizer.normalize_for_encoding(_read_text(args.input))
    payload_rep = normalizer.normalize_for_encoding(payload_raw)
    _report_normalization("visible text", visible_rep)
    _report_normalization("payload", payload_rep)
    if payload_raw and not payload_rep.output:
        _note("payload is entirely unencodable; nothing to embed")
        return EXIT_NEGATIVE

    doc = placement.smuggle(visible_rep.output, payload_rep.output,
                            placement.Placement(args.placement))
    _write_text(args.output, doc.content)
    return EXIT_OK


def cmd_decode(args) -> int:
    result = codec.verify(_read_text(args.input))
    if result.dropped:
        _note(f"warning: dropped {result.dropped} non-mirror tag code point(s)")
    _write_text(args.output, result.text)
    return EXIT_OK


def cmd_verify(args) -> int:
    recovered = codec.verify(_read_text(args.input)).text
    expected = args.expect if args.expect is not None else _read_text(args.expect_file)
    if recovered == expected:
        return EXIT_OK
    _note("payload mismatch:")
    _note(f"  expected {len(expected)} code point(s), recovered {len(recovered)}")
    for i, (a, b) in enumerate(zip(expected, recovered)):
        if a != b:
            _note(f"  first difference at offset {i}: expected U+{ord(a):04X}, got U+{ord(b):04X}")
            break
    return EXIT_NEGATIVE


def cmd_strip(args) -> int:
    _write_text(args.output, codec.strip_tags(_read_text(args.input)))
    return EXIT_OK


def cmd_scan(args) -> int:
    tokens = args.token or [presets_auth.get_preset("integrity").detection_token]
    report = scanner.scan(args.root, tokens,
                          recursive=not args.no_recursive,
                          extensions=args.ext or None)
    if args.json:
        _write_text(None, report.to_json() + "\n")
    else:
        _note(f"scanned {report.scanned_files} file(s), "
              f"{len(report.hits)} hit(s), {len(report.errors)} error(s)")
        for h in report.hits:
            line = f"{h.file}:{h.offset}: {h.kind}"
            if h.decoded is not None:
                line += f" decoded={h.decoded!r}"
            _write_text(None, line + "\n")
        for path, reason in report.errors:
            _note(f"error: {path}: {reason}")
    if args.fail_on_hit and report.hits:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_gauntlet(args) -> int:
    visible = _read_text(args.visible_file) if args.visible_file else (
        "Q1. Explain the difference between a process and a thread.\n")
    visible = normalizer.normalize_for_encoding(visible).output
    report = gauntlet.run_gauntlet(visible, gauntlet.default_payload(args.payload_bytes))
    if args.plot:
        gauntlet.plot_report(report, args.plot)
        _note(f"figure written to {args.plot}")
    if args.json:
        _write_text(None, report.to_json() + "\n")
    else:
        _write_text(None, report.to_table() + "\n")
    return EXIT_OK


def cmd_mint(args) -> int:
    token = presets_auth.mint_token(_metadata_from(args), _load_key(args))
    _write_text(None, token + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        ok = presets_auth.check_token(args.token, _metadata_from(args), _load_key(args))
    except presets_auth.MalformedTokenError as exc:
        _note(f"malformed token: {exc}")
        return EXIT_USAGE
    if ok:
        _note("token valid")
        return EXIT_OK
    _note("token mismatch")
    return EXIT_NEGATIVE


def cmd_presets(args) -> int:
    out = []
    for p in presets_auth.list_presets():
        out.append(f"[{p.id}] {p.title}")
        if p.detection_token:
            out.append(f"  detection token: {p.detection_token}")
        out.append("  " + p.payload_text.replace("\n", "\n  "))
        out.append("")
    _write_text(None, "\n".join(out))
    return EXIT_OK


def _add_io(parser, output=True):
    parser.add_argument("input", nargs="?", default="-",
                        help="input file, or - for stdin (default)")
    if output:
        parser.add_argument("-o", "--output", default=None,
                            help="output file, or - for stdout (default)")


def _add_metadata(parser):
    for name in ("course", "term", "section", "assignment-id", "key-id"):
        parser.add_argument(f"--{name}", required=True)
    parser.add_argument("--key-file",
                        help=f"path to the secret key file (or set {KEY_FILE_ENV})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="promptmark",
        description="Embed, recover, and verify invisible payloads in text.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="embed a payload into visible text")
    _add_io(p)
    p.add_argument("--preset", help="payload preset id (see `promptmark presets`)")
    p.add_argument("--payload", help="literal payload text")
    p.add_argument("--payload-file", help="read the payload from a file")
    p.add_argument("--placement", choices=[pl.value for pl in placement.Placement],
                   default=placement.Placement.END.value)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="recover the hidden payload")
    _add_io(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="check the hidden payload against an expected text")
    _add_io(p, output=False)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--expect", help="expected payload text")
    g.add_argument("--expect-file", help="read the expected payload from a file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("strip", help="remove all Tags-block code points")
    _add_io(p)
    p.set_defaults(func=cmd_strip)

    p = sub.add_parser("scan", help="search a directory of submissions")
    p.add_argument("root")
    p.add_argument("--token", action="append",
                   help="literal token to search for (repeatable; "
                        "default: the integrity preset token)")
    p.add_argument("--ext", action="append", help="only scan these extensions (repeatable)")
    p.add_argument("--no-recursive", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--fail-on-hit", action="store_true",
                   help="exit 1 if any hit is found")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("gauntlet", help="simulate channel pipelines and report survival")
    p.add_argument("--payload-bytes", type=int, default=gauntlet.DEFAULT_PAYLOAD_BYTES)
    p.add_argument("--visible-file", help="visible text to watermark (default: a sample brief)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", help="also render the survival matrix to this image file")
    p.set_defaults(func=cmd_gauntlet)

    p = sub.add_parser("mint", help="mint a metadata-bound detection token")
    _add_metadata(p)
    p.set_defaults(func=cmd_mint)

    p = sub.add_parser("check", help="check a metadata-bound detection token")
    _add_metadata(p)
    p.add_argument("--token", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("presets", help="list the shipped payload presets")
    p.set_defaults(func=cmd_presets)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FileNotFoundError, PermissionError, IsADirectoryError) as exc:
        _note(f"I/O error: {exc}")
        return EXIT_IO
    except (codec.UnnormalizedInputError, codec.NotTagStringError,
            presets_auth.PresetNotFoundError, ValueError) as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE
    except SystemExit:
        raise
    except BrokenPipeError:
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
