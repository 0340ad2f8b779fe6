#!/usr/bin/env python3
"""End-to-end demo: corpus -> pairs -> heldout regimes -> eval -> a session.

Runs the whole pipeline on the fixture corpus and prints what each stage
produced. Everything is seeded, so two runs with the same arguments print
the same numbers and write byte-identical dataset, regime, and eval files
(the recorded session log differs only in its event timestamps).
"""
from __future__ import annotations

import argparse
import json
from pathlib import Path

from versecraft import resources
from versecraft.evaluation import run_eval
from versecraft.generation import RetrievalBackend, SamplingParams, StubBackend, suggest
from versecraft.instructions import parse
from versecraft.seeding import derive_seed
from versecraft.session import EVENT_ACCEPT, EVENT_FINALIZE, EVENT_INSTRUCTION
from versecraft.session import EVENT_SUGGESTIONS, SessionStore, analytics, make_suggestion_id
from versecraft.synthesis import (
    SynthesisConfig,
    build_test_sets,
    ingest_corpus,
    synthesize,
    write_pairs,
    write_suite,
)

REPO = Path(__file__).resolve().parent.parent


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--corpus",
        default=str(REPO / "tests" / "fixtures" / "corpus.jsonl"),
        help="poem corpus in JSONL form (default: the bundled fixture corpus)",
    )
    parser.add_argument("--out", default="pipeline_out", help="output directory")
    parser.add_argument("--seed", type=int, default=13)
    parser.add_argument("--runs", type=int, default=3, help="eval repetitions")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    poems = ingest_corpus(args.corpus)
    n_lines = sum(len(p.lines) for p in poems)
    print(f"[1/4] corpus: {len(poems)} poems, {n_lines} lines")

    result = synthesize(poems, config=SynthesisConfig(seed=args.seed))
    write_pairs(out / "train.jsonl", result.train)
    write_pairs(out / "dev.jsonl", result.dev)
    (out / "manifest.json").write_text(
        json.dumps(result.manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(
        f"[2/4] pairs: {len(result.train)} train / {len(result.dev)} dev, "
        f"content hash {result.manifest['content_hash'][:12]}"
    )

    suites = build_test_sets(result.train, seed=args.seed)
    for name, items in suites.items():
        write_suite(out / f"{name}.jsonl", items)
    print(
        "[3/4] heldout regimes: "
        + ", ".join(f"{name}={len(items)}" for name, items in sorted(suites.items()))
    )
    for backend in (StubBackend(), RetrievalBackend([l for p in poems for l in p.lines])):
        report = run_eval(backend, suites, runs=args.runs, seed=args.seed)
        print(report.table())
        (out / f"eval_{report.backend}.json").write_text(
            json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )

    store = SessionStore(out / "sessions")
    backend = StubBackend()
    session_id = f"demo-{args.seed}"
    if store.exists(session_id):
        print(f"[4/4] session {session_id} already recorded; replaying it")
    else:
        catalog = resources.default_catalog()
        store.create(title="Morning draft", session_id=session_id)
        for index, text in enumerate(
            [
                "Write a poetic sentence about 'sun'",
                "Write a poetic sentence that ends in 'glory'",
            ]
        ):
            state = store.state(session_id)
            request_id = f"r{state.next_ordinal:04d}"
            params = SamplingParams(seed=derive_seed(session_id, state.next_ordinal))
            suggestions = suggest(backend, text, params)
            instruction = parse(text, catalog)
            store.append(
                session_id,
                EVENT_INSTRUCTION,
                {
                    "request_id": request_id,
                    "text": text,
                    "template_id": instruction.template_id if instruction else None,
                    "arguments": list(instruction.arguments) if instruction else [],
                },
            )
            store.append(
                session_id,
                EVENT_SUGGESTIONS,
                {
                    "request_id": request_id,
                    "suggestions": [
                        {
                            "suggestion_id": make_suggestion_id(request_id, i),
                            "text": s.text,
                            "backend_id": s.backend_id,
                            "passed": bool(s.check and s.check.ok),
                        }
                        for i, s in enumerate(suggestions)
                    ],
                },
            )
            store.append(
                session_id,
                EVENT_ACCEPT,
                {"suggestion_id": make_suggestion_id(request_id, index)},
            )
        store.append(session_id, EVENT_FINALIZE, {})
    report = analytics(store.state(session_id))
    print(f"[4/4] session {session_id} analytics:")
    print(json.dumps(report, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
