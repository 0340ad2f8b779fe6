"""Command line entry points.

Five subcommands cover the pipeline end to end: ``synth`` turns a poem
corpus into verified training pairs, ``testset`` builds the three
evaluation regimes from the training pairs, ``eval`` scores a backend on
those regimes, ``analyze`` folds a session log into its analytics, and
``serve`` starts the HTTP service. Every artifact-producing command is
deterministic for a fixed seed: rerunning it writes byte-identical files.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .evaluation import run_eval
from .generation import RemoteConfig, SamplingParams
from .service import ServiceConfig, _build_backend, create_app
from .session import analytics, replay, _read_log
from .synthesis import (
    SynthesisConfig,
    build_test_sets,
    read_pairs,
    read_suite,
    synthesize,
    write_pairs,
    write_suite,
)


def _dump_json(path: Path, payload: dict) -> None:
    path.write_text(
        json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True) + "\n",
        encoding="utf-8",
    )


def _cmd_synth(args: argparse.Namespace) -> int:
    config = SynthesisConfig(
        seed=args.seed, train_ratio=args.train_ratio, augment=not args.no_augment
    )
    result = synthesize(args.corpus, config=config)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_pairs(out / "train.jsonl", result.train)
    write_pairs(out / "dev.jsonl", result.dev)
    _dump_json(out / "manifest.json", result.manifest)
    print(
        f"pairs: {result.manifest['pairs']} "
        f"(train {result.manifest['train']}, dev {result.manifest['dev']})"
    )
    rejected = sum(result.rejected.values())
    if rejected:
        print(f"rejected by the checker: {rejected}", file=sys.stderr)
    print(f"wrote {out / 'train.jsonl'}")
    return 0


def _cmd_testset(args: argparse.Namespace) -> int:
    train = read_pairs(args.train)
    sizes = None
    if args.sizes:
        sizes = {}
        for part in args.sizes.split(","):
            name, _, value = part.partition("=")
            sizes[name.strip()] = int(value)
    suites = build_test_sets(train, sizes=sizes, seed=args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, items in suites.items():
        write_suite(out / f"{name}.jsonl", items)
        print(f"{name}: {len(items)} items -> {out / f'{name}.jsonl'}")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    suite = {}
    for path in sorted(Path(args.suites).glob("*.jsonl")):
        suite[path.stem] = read_suite(path)
    if not suite:
        print(f"no *.jsonl suites under {args.suites}", file=sys.stderr)
        return 2
    service_config = ServiceConfig(
        backend=args.backend,
        corpus_path=args.corpus,
        remote=RemoteConfig(url=args.remote_url) if args.remote_url else None,
    )
    backend = _build_backend(service_config)
    params = SamplingParams(
        top_k=args.top_k,
        temperature=args.temperature,
        max_tokens=args.max_tokens,
        num_candidates=args.num_candidates,
    )
    report = run_eval(
        backend, suite, params=params, runs=args.runs, seed=args.seed
    )
    print(report.table())
    if args.out:
        _dump_json(Path(args.out), report.to_dict())
        print(f"wrote {args.out}")
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    state = replay(_read_log(Path(args.log)))
    print(json.dumps(analytics(state), sort_keys=True, indent=2))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    config = ServiceConfig(
        store_root=args.store,
        backend=args.backend,
        corpus_path=args.corpus,
        remote=RemoteConfig(url=args.remote_url) if args.remote_url else None,
    )
    uvicorn.run(create_app(config), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="versecraft",
        description="instruction-controlled verse generation toolkit",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="derive instruction/verse pairs")
    synth.add_argument("--corpus", required=True, help="poem corpus (JSONL)")
    synth.add_argument("--out", required=True, help="output directory")
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("--train-ratio", type=float, default=0.9)
    synth.add_argument("--no-augment", action="store_true")
    synth.set_defaults(func=_cmd_synth)

    testset = sub.add_parser("testset", help="build evaluation regimes")
    testset.add_argument("--train", required=True, help="training pairs (JSONL)")
    testset.add_argument("--out", required=True, help="output directory")
    testset.add_argument("--seed", type=int, default=0)
    testset.add_argument(
        "--sizes", default="", help="per-set sizes, e.g. kika=82,kiua=82,comp=78"
    )
    testset.set_defaults(func=_cmd_testset)

    evaluate = sub.add_parser("eval", help="score a backend on the regimes")
    evaluate.add_argument("--suites", required=True, help="directory of *.jsonl suites")
    evaluate.add_argument(
        "--backend", default="stub", choices=["stub", "retrieval", "remote"]
    )
    evaluate.add_argument("--corpus", default=None, help="corpus for retrieval")
    evaluate.add_argument("--remote-url", default=None)
    evaluate.add_argument("--runs", type=int, default=5)
    evaluate.add_argument("--seed", type=int, default=0)
    evaluate.add_argument("--top-k", type=int, default=5)
    evaluate.add_argument("--temperature", type=float, default=0.7)
    evaluate.add_argument("--max-tokens", type=int, default=64)
    evaluate.add_argument("--num-candidates", type=int, default=5)
    evaluate.add_argument("--out", default=None, help="JSON report path")
    evaluate.set_defaults(func=_cmd_eval)

    analyze = sub.add_parser("analyze", help="analytics for a session log")
    analyze.add_argument("log", help="session event log (JSONL)")
    analyze.set_defaults(func=_cmd_analyze)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--store", default="sessions")
    serve.add_argument(
        "--backend", default="stub", choices=["stub", "retrieval", "remote"]
    )
    serve.add_argument("--corpus", default=None)
    serve.add_argument("--remote-url", default=None)
    serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
