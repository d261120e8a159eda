"""Command-line entry point: convert, gamut, delta-e, bench, analyze, serve.

Exit codes: 0 success, 2 usage or validation error, 1 internal error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import analysis, bench
from .core import ColorCoord, ColorModelId
from .metrics import DeltaEParams, LabPair, delta_e_76, delta_e_94, delta_e_2000
from .ppm import read_ppm
from .service import make_server
from .transforms import COMPONENTS, build_kernels, convert_image, unit_from_rgb8

USAGE_ERROR = 2
INTERNAL_ERROR = 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except KeyboardInterrupt:
        return 0
    except Exception as exc:  # internal failure, not a usage problem
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL_ERROR


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert a P6 PPM image to one model, as CSV")
    p.add_argument("--from", dest="source_model", default="rgb", choices=["rgb"])
    p.add_argument("--to", dest="model", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--bt601-studio", action="store_true", help="studio-range YCbCr (o_Y=16)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("gamut", help="sample the RGB cube into a model, as CSV")
    p.add_argument("--model", required=True)
    p.add_argument("--stride", type=int, default=8)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--bt601-studio", action="store_true")
    p.set_defaults(func=cmd_gamut)

    p = sub.add_parser("delta-e", help="color difference between two Lab triples")
    p.add_argument("--metric", required=True, choices=["76", "94", "2000"])
    p.add_argument("--lab1", required=True, metavar="L,a,b")
    p.add_argument("--lab2", required=True, metavar="L,a,b")
    p.add_argument("--kl", type=float, default=1.0)
    p.add_argument("--kc", type=float, default=1.0)
    p.add_argument("--kh", type=float, default=1.0)
    p.add_argument("--textiles", action="store_true", help="CIE94 textiles constants")
    p.set_defaults(func=cmd_delta_e)

    p = sub.add_parser("bench", help="time conversions (scalar or whole-image)")
    p.add_argument("--mode", choices=["scalar", "image"], default="scalar")
    p.add_argument("--models", default="all", help="comma list, 'all', may include 'null'")
    p.add_argument("--runs", type=int, default=None)
    p.add_argument("--iters", type=int, default=None)
    p.add_argument("--warmup", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--direction", choices=["roundtrip", "forward", "inverse"], default="roundtrip")
    p.add_argument("--out", dest="outfile", default=None, help="CSV path; JSON mirror written beside it")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("analyze", help="per-model completion times and k-means categories")
    p.add_argument("--sessions", default=None, help="session CSV from the picker service")
    p.add_argument("--replay-paper", action="store_true", help="use the published mean times")
    p.add_argument("--out", dest="outfile", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("serve", help="run the picker experiment service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--seed", type=int, default=None, help="target-color seed for reproducible runs")
    p.set_defaults(func=cmd_serve)

    return parser


# ---------------------------------------------------------------------------


def _fmt(v: float, places: int) -> str:
    rounded = round(v, places)
    if rounded == 0:
        rounded = 0.0  # avoid "-0.000"
    return f"{rounded:.{places}f}"


def cmd_convert(args) -> int:
    model = ColorModelId.parse(args.model)
    kernels = build_kernels(bt601_studio=args.bt601_studio)
    buf = read_ppm(args.infile)
    converted = convert_image(buf, model, kernels)
    header = ",".join(c.name for c in COMPONENTS[model])
    with open(args.outfile, "w", encoding="utf-8", newline="") as fh:
        fh.write(header + "\n")
        for coord in converted.pixels:
            fh.write(",".join(_fmt(v, 3) for v in coord.components) + "\n")
    print(f"wrote {len(converted.pixels)} rows to {args.outfile}")
    return 0


def cmd_gamut(args) -> int:
    model = ColorModelId.parse(args.model)
    if not 1 <= args.stride <= 128:
        raise ValueError(f"stride {args.stride} outside [1, 128]")
    kernels = build_kernels(bt601_studio=args.bt601_studio)
    fwd = kernels[model].forward
    header = "r,g,b," + ",".join(c.name for c in COMPONENTS[model])
    count = 0
    with open(args.outfile, "w", encoding="utf-8", newline="") as fh:
        fh.write(header + "\n")
        from .core import Rgb8

        for r in range(0, 256, args.stride):
            for g in range(0, 256, args.stride):
                for b in range(0, 256, args.stride):
                    coord = fwd(unit_from_rgb8(Rgb8(r, g, b)))
                    vals = ",".join(_fmt(v, 6) for v in coord.components)
                    fh.write(f"{r},{g},{b},{vals}\n")
                    count += 1
    print(f"wrote {count} rows to {args.outfile}")
    return 0


def cmd_delta_e(args) -> int:
    pair = LabPair(_parse_lab(args.lab1), _parse_lab(args.lab2))
    params = DeltaEParams(k_l=args.kl, k_c=args.kc, k_h=args.kh)
    if args.metric == "76":
        value = delta_e_76(pair)
    elif args.metric == "94":
        value = delta_e_94(pair, params, textiles=args.textiles)
    else:
        value = delta_e_2000(pair, params)
    print(f"{value:.4f}")
    return 0


def _parse_lab(text: str) -> ColorCoord:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected L,a,b with three components, got {text!r}")
    try:
        l, a, b = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"non-numeric Lab components in {text!r}") from None
    return ColorCoord(ColorModelId.LAB, l, a, b)


def cmd_bench(args) -> int:
    overrides = {}
    if args.runs is not None:
        overrides["runs"] = args.runs
    if args.iters is not None:
        overrides["iterations_per_run"] = args.iters
    if args.warmup is not None:
        overrides["warmup_iterations"] = args.warmup
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.mode == "image":
        cfg = bench.BenchConfig.image_default(**overrides)
    else:
        cfg = bench.BenchConfig.scalar_default(**overrides)

    models = _parse_model_list(args.models)
    if args.mode == "image":
        report = bench.bench_image(cfg, models)
    else:
        report = bench.bench_scalar(cfg, models, direction=args.direction)

    sys.stdout.write(bench.render_table(report))
    if args.outfile:
        _write_mirrors(args.outfile, bench.report_to_csv(report), bench.report_to_json(report))
        print(f"wrote {args.outfile} and {_json_path(args.outfile)}")
    return 0


def _parse_model_list(text: str) -> list[str]:
    if text.strip().lower() == "all":
        return [m.value for m in ColorModelId]
    names = [t for t in (s.strip() for s in text.split(",")) if t]
    if not names:
        raise ValueError("no models given")
    return names


def cmd_analyze(args) -> int:
    if args.replay_paper == (args.sessions is not None):
        raise ValueError("choose exactly one of --sessions FILE or --replay-paper")
    if args.replay_paper:
        table = analysis.replay_paper()
    else:
        result = analysis.ingest_sessions(args.sessions)
        for reject in result.rejected:
            print(f"warning: line {reject.line}: {reject.reason}", file=sys.stderr)
        table = analysis.kmeans_1d(analysis.mean_times(result.records))
    sys.stdout.write(analysis.render_intuitiveness(table))
    if args.outfile:
        _write_mirrors(args.outfile, analysis.table_to_csv(table), analysis.table_to_json(table))
        print(f"wrote {args.outfile} and {_json_path(args.outfile)}")
    return 0


def cmd_serve(args) -> int:
    server = make_server(host=args.host, port=args.port, seed=args.seed)
    host, port = server.server_address[:2]
    print(f"colorlab picker service listening on http://{host}:{port}", flush=True)
    print(f"session log: {server.service.session_path}", flush=True)
    try:
        server.serve_forever()
    finally:
        server.server_close()
    return 0


def _json_path(csv_path: str) -> str:
    root, _ = os.path.splitext(csv_path)
    return root + ".json"


def _write_mirrors(csv_path: str, csv_text: str, json_text: str) -> None:
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(csv_text)
    with open(_json_path(csv_path), "w", encoding="utf-8", newline="") as fh:
        fh.write(json_text)


if __name__ == "__main__":
    sys.exit(main())
