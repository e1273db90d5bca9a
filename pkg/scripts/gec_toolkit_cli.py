"""
Command-line interface for the Romanian GEC corpus toolkit

Subcommands: corrupt, enrich-ces, review, split, stats, score-ged, score-gec, validate
"""
import argparse
import json
import logging
import os
import sys

# Add the project root to the path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(project_root)

from tqdm import tqdm

from config.config import Config, load_toolkit_config
from src.dataset.corpus import DEFAULT_SOURCE_LABEL, read_corpus
from src.dataset.dataset_io import audit_file, read_examples, write_examples
from src.dataset.dataset_stats import compute_stats
from src.dataset.generator import GenerationEngines, generate_dataset
from src.dataset.splitter import SplitSpec, split
from src.eval.gec_scorer import score_gec
from src.eval.ged_scorer import score_ged
from src.eval.reports import DecodingInfo, ScoreReport
from src.eval.score_io import read_sentences, read_tag_sequences
from src.llm.ces_store import CorruptionExampleSet, ces_filename, load_ces, load_ces_directory, save_ces
from src.llm.llm_client import BoundedClient, FixtureClient, OpenAIClient
from src.llm.llm_generator import AutoAcceptReviewer, InteractiveReviewer, LlmSettings, enrich_ces, review_ces
from src.noise.noise_injector import NoiseInjector
from src.taxonomy.error_taxonomy import plan_errors
from src.text.tokenizer import tokenize
from src.utils.errors import GecToolkitError, UsageError
from src.utils.logging_setup import setup_logging

logger = logging.getLogger("gec_toolkit_cli")


def build_llm_client(config, fixture_path=None, endpoint=None):
    """Fixture replay when a fixture file is given, the OpenAI API when a key is available, else None"""
    fixture_path = fixture_path or config.get("llm.fixture_path")
    if fixture_path:
        client = FixtureClient.from_file(fixture_path, miss_response=config.get("llm.fixture_miss_response"))
        print(f"✅ Replaying {len(client)} recorded LLM exchanges from {fixture_path}")
    else:
        key_env = config.get("llm.api_key_env")
        api_key = os.getenv(key_env, "")
        if not api_key:
            print(f"⚠️ No LLM fixture and no {key_env}; LLM error types fall back to noise injection")
            return None
        client = OpenAIClient(api_key=api_key, endpoint=endpoint or config.get("llm.endpoint"))
        print(f"✅ Using {config.get('llm.model_id')} for LLM error types")
    return BoundedClient(client, int(config.get("llm.max_in_flight")))


def write_json(path, document):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document, f, ensure_ascii=False, indent=2, sort_keys=True)
        f.write("\n")
    print(f"💾 Report written to {path}")


def cmd_corrupt(args, config):
    seed = args.seed if args.seed is not None else int(config.get("generation.seed"))
    corpus = read_corpus(args.input, args.source_label)
    if not corpus:
        raise UsageError(f"no sentences in {args.input}")
    print(f"📚 Loaded {len(corpus)} clean sentences")

    taxonomy = config.taxonomy()
    plan = plan_errors(len(corpus), taxonomy.shares(), seed, taxonomy)
    vocabulary = NoiseInjector.build_vocabulary(tokenize(item.text) for item in corpus)
    ces = load_ces_directory(config.get("llm.ces_dir"), taxonomy)
    engines = GenerationEngines.from_config(config, vocabulary, build_llm_client(config, args.llm_fixture,
                                                                                  args.llm_endpoint), ces)

    with tqdm(total=len(corpus), desc="Corrupting", unit="sent") as progress:
        examples = generate_dataset(corpus, plan, engines, seed,
                                    max_workers=int(config.get("generation.max_workers")),
                                    on_progress=progress.update)
        written = write_examples(examples, args.output)
    print(f"✅ Wrote {written} examples to {args.output}")
    if written < len(corpus):
        print(f"⚠️ {len(corpus) - written} sentences skipped (see log)")

    stats = compute_stats(read_examples(args.output))
    print(f"📊 Error rate {stats.total.error_rate:.2%} over {stats.total.token_count} tokens")
    if args.stats_out:
        write_json(args.stats_out, stats.to_dict())
    return 0


def _ces_for(args, config):
    taxonomy = config.taxonomy()
    error = taxonomy.get(args.error)
    path = args.ces
    if not os.path.exists(path):
        seed_path = os.path.join(config.get("llm.ces_dir"), ces_filename(error.code))
        if not os.path.exists(seed_path):
            raise UsageError(f"no CES at {path} and no seed file {seed_path}")
        print(f"🌱 Starting from seed set {seed_path}")
        path = seed_path
    return load_ces(path, error)


def cmd_enrich_ces(args, config):
    ces = _ces_for(args, config)
    client = build_llm_client(config, args.llm_fixture, args.llm_endpoint)
    if client is None:
        raise UsageError("enrich-ces needs an LLM: pass --llm-fixture or set the API key")
    corpus = [item.text for item in read_corpus(args.corpus, args.source_label)]
    reviewer = AutoAcceptReviewer() if args.auto_accept else InteractiveReviewer()
    before = len(ces)
    seed = args.seed if args.seed is not None else int(config.get("generation.seed"))
    enrich_ces(client, ces, corpus, reviewer, seed=seed, settings=LlmSettings.from_config(config.section("llm")))
    save_ces(ces, args.ces)
    print(f"✅ CES {ces.error_type.code}: {before} -> {len(ces)} entries (capacity {ces.capacity})")
    for warning in ces.warnings:
        print(f"⚠️ {warning}")
    return 0


def cmd_review(args, config):
    code = args.error or os.path.splitext(os.path.basename(args.ces))[0].replace("_", ":")
    ces = load_ces(args.ces, config.taxonomy().get(code))
    removed = review_ces(ces, InteractiveReviewer())
    save_ces(ces, args.ces)
    print(f"✅ Removed {removed} entries, {len(ces)} remain in {args.ces}")
    return 0


def cmd_split(args, config):
    examples = list(read_examples(args.input))
    train, test = split(examples, SplitSpec(args.fraction, args.test_corpus), args.seed)
    write_examples(train, args.train_out)
    write_examples(test, args.test_out)
    print(f"✅ {len(train)} train examples -> {args.train_out}")
    print(f"✅ {len(test)} test examples -> {args.test_out}")
    return 0


def cmd_stats(args, config):
    stats = compute_stats(read_examples(args.input))
    print("\n📊 Dataset composition")
    print(stats.to_frame().to_string(float_format=lambda x: f"{x:.4f}"))
    print("\n🏷️ Error types")
    print(stats.type_frame().to_string(float_format=lambda x: f"{x:.4f}"))
    if stats.keep_fraction is not None:
        print(f"\n🔧 Noise keep fraction: {stats.keep_fraction:.4f}")
    if args.json_out:
        write_json(args.json_out, stats.to_dict())
    return 0


def _decoding(args, config):
    return DecodingInfo(
        top_p=float(config.get("decoding.top_p")),
        beam_size=int(config.get("decoding.beam_size")),
        strategy=args.decoding,
    )


def cmd_score_ged(args, config):
    per_tag, aggregate = score_ged(read_tag_sequences(args.pred), read_tag_sequences(args.gold),
                                   mismatch_counts_gold_fn=args.mismatch_fn)
    report = ScoreReport("ged", aggregate, per_tag, _decoding(args, config))
    print(report.to_frame().to_string(float_format=lambda x: f"{x:.4f}"))
    if args.json_out:
        write_json(args.json_out, report.to_dict())
    return 0


def cmd_score_gec(args, config):
    metrics = score_gec(read_sentences(args.src), read_sentences(args.hyp), read_sentences(args.ref))
    report = ScoreReport("gec", metrics, decoding=_decoding(args, config))
    print(report.to_frame().to_string(float_format=lambda x: f"{x:.4f}"))
    if args.json_out:
        write_json(args.json_out, report.to_dict())
    return 0


def cmd_validate(args, config):
    problems = audit_file(args.input)
    if not problems:
        print(f"✅ Every example in {args.input} is valid")
        return 0
    for line_number, example_id, violations in problems:
        print(f"❌ line {line_number} ({example_id}): {'; '.join(violations)}")
    print(f"⚠️ {len(problems)} invalid examples")
    return 1


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description="Synthetic Romanian GEC corpus toolkit")
    parser.add_argument("--config", default=None,
                        help=f"YAML configuration file (default: {Config.CONFIG_PATH} when present)")
    parser.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                        help="Override a configuration key, e.g. --set llm.temperature=0.2")
    parser.add_argument("--log-level", default="warning", choices=["debug", "info", "warning", "error"])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("corrupt", help="Generate a parallel GEC dataset from a clean corpus")
    p.add_argument("--input", required=True, help="Clean corpus, one sentence per line ([LABEL<TAB>]sentence)")
    p.add_argument("--output", required=True, help="Output JSONL dataset")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--llm-fixture", default=None, help="Recorded LLM exchanges (JSONL)")
    p.add_argument("--llm-endpoint", default=None, help="Base URL of an OpenAI-compatible server")
    p.add_argument("--source-label", default=DEFAULT_SOURCE_LABEL)
    p.add_argument("--stats-out", default=None, help="Also write dataset statistics as JSON")
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("enrich-ces", help="Grow a corruption example set with reviewed LLM generations")
    p.add_argument("--error", required=True, help="Two-shot error code, e.g. VERB:SVA")
    p.add_argument("--corpus", required=True)
    p.add_argument("--ces", required=True, help="CES file to grow (seeded from llm.ces_dir when missing)")
    p.add_argument("--auto-accept", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--llm-fixture", default=None)
    p.add_argument("--llm-endpoint", default=None)
    p.add_argument("--source-label", default=DEFAULT_SOURCE_LABEL)
    p.set_defaults(func=cmd_enrich_ces)

    p = sub.add_parser("review", help="Accept or reject LLM-generated CES entries")
    p.add_argument("--ces", required=True)
    p.add_argument("--error", default=None, help="Error code (default: derived from the file name)")
    p.set_defaults(func=cmd_review)

    p = sub.add_parser("split", help="Train/test split")
    p.add_argument("--input", required=True)
    p.add_argument("--train-out", required=True)
    p.add_argument("--test-out", required=True)
    p.add_argument("--fraction", type=float, default=0.9)
    p.add_argument("--test-corpus", default=None, help="Draw the test set only from this source corpus")
    p.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("stats", help="Dataset composition statistics")
    p.add_argument("--input", required=True)
    p.add_argument("--json-out", default=None)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("score-ged", help="Error detection precision/recall/F0.5")
    p.add_argument("--pred", required=True, help="Predicted tags, one sequence per line (or JSONL)")
    p.add_argument("--gold", required=True)
    p.add_argument("--mismatch-fn", action="store_true",
                   help="Also count a false negative for the gold tag on error-vs-error mismatches")
    p.add_argument("--decoding", default=None, choices=["top_p", "beam"])
    p.add_argument("--json-out", default=None)
    p.set_defaults(func=cmd_score_ged)

    p = sub.add_parser("score-gec", help="Correction precision/recall/F0.5 over extracted edits")
    p.add_argument("--src", required=True)
    p.add_argument("--hyp", required=True)
    p.add_argument("--ref", required=True)
    p.add_argument("--decoding", default=None, choices=["top_p", "beam"])
    p.add_argument("--json-out", default=None)
    p.set_defaults(func=cmd_score_gec)

    p = sub.add_parser("validate", help="Audit every example invariant of a dataset file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_validate)

    return parser.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    setup_logging(args.log_level)
    try:
        config_path = args.config or (Config.CONFIG_PATH if os.path.exists(Config.CONFIG_PATH) else None)
        config = load_toolkit_config(config_path, args.overrides)
        return args.func(args, config)
    except GecToolkitError as e:
        print(f"❌ {e}")
        return 1
    except OSError as e:
        print(f"❌ {e.strerror}: {e.filename}")
        return 1
    except KeyboardInterrupt:
        print("\n👋 Interrupted")
        return 130


if __name__ == "__main__":
    sys.exit(main())
