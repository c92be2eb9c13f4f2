"""Plotting CLI: render a spec file, or a known figure from a CSV directory."""

from __future__ import annotations

import argparse
import json
import sys

from plotkit.render import PanelSpec, PlotSpec, fig1_spec, render


def spec_from_dict(d: dict) -> PlotSpec:
    panels = tuple(
        PanelSpec(csv_path=p["csv"], x_field=p["x"], title=p.get("title", ""))
        for p in d["panels"]
    )
    return PlotSpec(
        panels=panels,
        rows=int(d["rows"]),
        cols=int(d["cols"]),
        out_path=d["out"],
        y_field=d.get("y", "perf_mean"),
        series_field=d.get("series", "scheme"),
        fmt=d.get("format", "png"),
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="gradelab-plot", description=__doc__)
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--spec", help="JSON plot spec file")
    group.add_argument("--figure", choices=["fig1"], help="render a canonical figure")
    parser.add_argument("--in-dir", help="directory holding the figure CSVs")
    parser.add_argument("--out", help="output image path (with --figure)")
    args = parser.parse_args(argv)
    try:
        if args.spec:
            with open(args.spec, encoding="utf-8") as fh:
                spec = spec_from_dict(json.load(fh))
        else:
            if not (args.in_dir and args.out):
                raise ValueError("--figure needs --in-dir and --out")
            spec = fig1_spec(args.in_dir, args.out)
        result = render(spec)
        print(result.out_path)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
