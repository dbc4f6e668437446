"""Command line front end: ``supergeom [FILE] [--format table|json]``."""

from __future__ import annotations

import argparse
import json
import sys

from ..errors import ParseError
from .parser import Session, parse
from .runner import Outcome, Runner, render_json, render_table

__all__ = ["main", "parse", "run_text", "Session"]


def run_text(text: str, fmt: str = "table", max_degree: int = 12, figures=None) -> tuple[str, int]:
    """Parse and run a session; returns (rendered output, exit code)."""
    try:
        session = parse(text)
    except ParseError as exc:
        if fmt == "json":
            rec = [{"command": "parse", "object": "", "result": {
                "error": exc.message, "line": exc.line, "column": exc.column, "exit_code": 1}}]
            return json.dumps(rec, indent=2, ensure_ascii=False) + "\n", 1
        return f"parse error: {exc}\n", 1
    outcome: Outcome = Runner(session, max_degree, figures).run()
    rendered = render_json(outcome) if fmt == "json" else render_table(outcome)
    return rendered, outcome.exit_code


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="supergeom", description="Cohomology and invariants on projective superspace.")
    ap.add_argument("file", nargs="?", help="session file (default: standard input)")
    ap.add_argument("--format", choices=("table", "json"), default="table")
    ap.add_argument("--max-degree", type=int, default=12, help="cap on twists and Koszul windows")
    ap.add_argument("--seed", type=int, default=0, help="reserved for randomized commands")
    ap.add_argument("--figures", metavar="DIR", help="write PNG renderings of cohomology and Betti tables here")
    args = ap.parse_args(argv)
    if args.file and args.file != "-":
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    out, code = run_text(text, args.format, args.max_degree, args.figures)
    stream = sys.stderr if code == 1 and args.format == "table" else sys.stdout
    stream.write(out)
    return code
