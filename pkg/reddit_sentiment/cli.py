"""Command-line entry point: ingest, label, annotate, evaluate and report"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import pandas as pd

from reddit_sentiment.annotate.agreement import (
    format_agreement_table,
    inter_annotator_agreement,
    restrict_to_band,
    validity_report,
)
from reddit_sentiment.annotate.sampling import AnnotationTask, consensus_predicate, sample_messages
from reddit_sentiment.annotate.session import read_records, record_path, run_session
from reddit_sentiment.classify.serialization import save_model
from reddit_sentiment.classify.train import Algorithm, train_model
from reddit_sentiment.config import (
    EFFECTIVE_CONFIG_NAME,
    PipelineConfig,
    apply_overrides,
    load_config,
    write_config,
)
from reddit_sentiment.corpus.dump import load_dump, write_dump
from reddit_sentiment.corpus.filters import Message, filter_by_length, filter_corpus
from reddit_sentiment.corpus.stats import CorpusStats, corpus_stats, length_histogram, write_stats
from reddit_sentiment.corpus.synthetic import make_planted_corpus
from reddit_sentiment.evaluation.evaluation import GridResult, grid_search
from reddit_sentiment.evaluation.folds import stratified_kfold
from reddit_sentiment.evaluation.report import (
    grid_delta,
    render_corpus_table,
    render_grid_table,
    render_label_table,
)
from reddit_sentiment.evaluation.utils import LabelledCorpus, labelled_corpus, labelled_frame
from reddit_sentiment.exceptions import InputDataError, PipelineError
from reddit_sentiment.features.vectorize import Representation, build_feature_matrix, export_matrix
from reddit_sentiment.features.vocabulary import build_vocabulary, dump_vocabulary
from reddit_sentiment.lexsent.consensus import (
    AGREEMENT_COLUMNS,
    agreement_stats,
    label_messages,
    read_labels,
    write_labels,
)
from reddit_sentiment.lexsent.labels import SentimentLabel
from reddit_sentiment.lexsent.lexicon import load_polarity_lexicon, load_valence_lexicon
from reddit_sentiment.seeds import derive_seed

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2

CORPORA = ("all", "in_band")
FLOAT_FORMAT = "%.6f"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s: %(message)s"


def corpus_path(out: Path, corpus: str) -> Path:
    """Filtered corpus file, corpus is "all" or "in_band" """
    return out / f"covid_{corpus}.jsonl"


def labels_path(out: Path, corpus: str) -> Path:
    """Per-message labels of one corpus"""
    return out / f"labels_{corpus}.csv"


def grid_path(out: Path, corpus: str) -> Path:
    """Grid search results of one corpus"""
    return out / f"grid_{corpus}.csv"


def annotation_dir(out: Path) -> Path:
    """Directory of annotation tasks and labels"""
    return out / "annotation"


def _read_messages(path: Path) -> list[Message]:
    return [Message.from_comment(comment) for comment in load_dump(path)]


def _flag_overrides(args: argparse.Namespace) -> dict:
    """Config overrides given as command-line flags"""
    overrides = {
        "run": {"seed": args.seed, "out": args.out, "n_jobs": args.jobs, "dataset": args.dataset},
        "corpus": {"band": getattr(args, "band", None)},
        "label": {
            "thresholds_a": getattr(args, "thresholds", None),
            "thresholds_b": getattr(args, "thresholds_b", None),
        },
        "classifier": {"algorithms": getattr(args, "algorithms", None)},
    }
    return {
        section: {key: str(value) for key, value in values.items() if value is not None}
        for section, values in overrides.items()
    }


def cmd_ingest(args: argparse.Namespace, config: PipelineConfig) -> int:
    """Filter dumps into the all-topic and in-band corpora plus their statistics"""
    out = config.run.out
    corpus = config.corpus
    kept = []
    stats = CorpusStats(0, 0, 0, 0, 0, 0)
    for path in args.dumps:
        dump = load_dump(path)
        dump_kept, _ = filter_corpus(
            dump, corpus.keywords, corpus.bot_blocklist, corpus.start_utc, corpus.end_utc
        )
        messages = [Message.from_comment(c) for c in dump_kept]
        stats = stats.merge(corpus_stats(dump, messages, corpus.band))
        kept.extend(dump_kept)

    messages = [Message.from_comment(c) for c in kept]
    in_band_ids = {m.id for m in filter_by_length(messages, corpus.band).retained}
    write_dump(kept, corpus_path(out, "all"))
    write_dump([c for c in kept if c.id in in_band_ids], corpus_path(out, "in_band"))
    write_stats(stats, corpus.band, out / "corpus_stats.csv")
    length_histogram(messages, corpus.histogram_bin_width).to_csv(
        out / "length_histogram.csv", index=False
    )
    print(render_corpus_table({config.run.dataset: stats.to_frame(corpus.band)}))
    return EXIT_OK


def cmd_label(args: argparse.Namespace, config: PipelineConfig) -> int:
    """Label both corpora with the two scorers and report their agreement"""
    out = config.run.out
    lexicons = config.lexicon
    valence_lexicon = load_valence_lexicon(
        lexicons.valence, lexicons.boosters, lexicons.negators, config.valence.booster_increment
    )
    polarity_lexicon = load_polarity_lexicon(lexicons.polarity, lexicons.polarity_negators)
    rows = []
    for corpus in CORPORA:
        records = label_messages(
            _read_messages(corpus_path(out, corpus)),
            valence_lexicon,
            polarity_lexicon,
            config.valence,
            config.label.thresholds_a,
            config.label.thresholds_b,
        )
        write_labels(records, labels_path(out, corpus))
        if not records:
            logger.warning("Corpus %s is empty, no agreement statistics", corpus)
            continue
        rows.append({"corpus": corpus, **agreement_stats(records).to_dict()})
    agreement = pd.DataFrame(rows, columns=["corpus", *AGREEMENT_COLUMNS])
    agreement.to_csv(out / "label_agreement.csv", index=False, float_format=FLOAT_FORMAT)
    if rows:
        print(render_label_table(agreement))
    return EXIT_OK


def cmd_sample(args: argparse.Namespace, config: PipelineConfig) -> int:
    """Draw an annotation group and save it as a task file"""
    out = config.run.out
    messages = _read_messages(corpus_path(out, args.corpus))
    predicate = None
    filter_name = None
    if args.consensus:
        try:
            label = SentimentLabel.parse(args.consensus)
        except ValueError as e:
            raise InputDataError(str(e)) from e
        predicate = consensus_predicate(read_labels(labels_path(out, args.corpus)), label)
        filter_name = f"consensus={label.value}"
    task = sample_messages(
        messages,
        args.n,
        derive_seed(config.run.seed, f"sample/{args.task_id}"),
        predicate=predicate,
        task_id=args.task_id,
        source_filter=args.source,
        filter_name=filter_name,
    )
    annotation_dir(out).mkdir(parents=True, exist_ok=True)
    task.save(annotation_dir(out) / f"{task.task_id}.task.json")
    return EXIT_OK


def _messages_by_id(out: Path) -> dict[str, Message]:
    return {m.id: m for m in _read_messages(corpus_path(out, "all"))}


def cmd_annotate(args: argparse.Namespace, config: PipelineConfig) -> int:
    """Run an interactive labelling session"""
    out = config.run.out
    task = AnnotationTask.load(annotation_dir(out) / f"{args.task_id}.task.json")
    run_session(task, _messages_by_id(out), args.annotator, annotation_dir(out))
    return EXIT_OK


def cmd_agree(args: argparse.Namespace, config: PipelineConfig) -> int:
    """Agreement of two annotators, optionally against the tool labels and within the band"""
    out = config.run.out
    first, second = args.annotators
    records = []
    for annotator in (first, second):
        path = record_path(annotation_dir(out), args.task_id, annotator)
        if not path.exists():
            raise InputDataError(f"No annotations of {annotator} for task {args.task_id}")
        records.append(read_records(path))

    reports = {}
    tool_labels = None
    if args.validity:
        tool_labels = {r.message_id: r.consensus for r in read_labels(labels_path(out, "all"))}

    def report(records_a, records_b):
        if tool_labels is None:
            return inter_annotator_agreement(records_a, records_b)
        ids = {r.message_id for r in records_a}
        missing = ids - set(tool_labels)
        if missing:
            raise InputDataError(f"No tool labels for {len(missing)} annotated messages")
        return validity_report(records_a, records_b, {i: tool_labels[i] for i in ids})

    reports[args.task_id] = report(*records)
    if args.restrict_band:
        messages = _messages_by_id(out)
        band = config.corpus.band
        restricted = [restrict_to_band(r, messages, band) for r in records]
        reports[f"{args.task_id} {band}"] = report(*restricted)

    rows = []
    for name, result in reports.items():
        rows.append({"group": name, **result.to_dict()})
    pd.DataFrame(rows).to_csv(
        out / f"agreement_{args.task_id}.csv", index=False, float_format=FLOAT_FORMAT
    )
    print(format_agreement_table(reports))
    return EXIT_OK


def _save_best_models(result: GridResult, data: LabelledCorpus, config: PipelineConfig) -> None:
    models_dir = config.run.out / "models"
    models_dir.mkdir(parents=True, exist_ok=True)
    params = config.classifier.to_params(config.run.dataset)
    for name, row in result.best_rows().items():
        algorithm = Algorithm(name)
        vocabulary = build_vocabulary(data.token_lists, row.min_freq)
        features = build_feature_matrix(
            data.token_lists, data.labels, vocabulary, Representation(row.representation)
        )
        model = train_model(
            algorithm,
            features,
            params,
            seed=derive_seed(config.run.seed, f"final/{algorithm.value}"),
            n_jobs=config.run.n_jobs,
        )
        save_model(model, models_dir / f"{algorithm.value}.json")
        dump_vocabulary(vocabulary, models_dir / f"{algorithm.value}.vocab.tsv")


def cmd_eval(args: argparse.Namespace, config: PipelineConfig) -> int:
    """Grid search on both corpora, their best-F delta and the final in-band models"""
    out = config.run.out
    grids = {}
    for corpus in CORPORA:
        frame = labelled_frame(
            _read_messages(corpus_path(out, corpus)), read_labels(labels_path(out, corpus))
        )
        data = labelled_corpus(frame)
        plan = stratified_kfold(
            data.labels, config.cv.k, derive_seed(config.run.seed, f"cv/{corpus}")
        )
        result = grid_search(
            data.token_lists,
            data.labels,
            plan,
            algorithms=config.classifier.algorithms,
            representations=config.features.representations,
            min_freq_range=config.features.min_freq_range,
            params=config.classifier.to_params(config.run.dataset),
            seed=derive_seed(config.run.seed, f"grid/{corpus}"),
            averaging=config.cv.averaging,
            vocabulary_scope=config.features.vocabulary_scope,
            n_jobs=config.run.n_jobs,
            progress=not args.quiet and sys.stderr.isatty(),
        )
        grids[corpus] = result.to_frame(config.run.dataset)
        grids[corpus].to_csv(grid_path(out, corpus), index=False, float_format=FLOAT_FORMAT)
        print(render_grid_table(grids[corpus], f"{config.run.dataset} ({corpus})"))
        print()
        if corpus == "in_band" and result.best_per_algorithm:
            _save_best_models(result, data, config)
            if args.export_matrix:
                vocabulary = build_vocabulary(data.token_lists, 1)
                features = build_feature_matrix(data.token_lists, data.labels, vocabulary)
                export_matrix(features, out / "matrix_in_band.csv", out / "matrix_labels.csv")

    if not any((grid["status"] == "ok").any() for grid in grids.values()):
        raise PipelineError("Every grid cell failed")
    delta = grid_delta(grids["all"], grids["in_band"])
    delta.to_csv(out / "grid_delta.csv", index=False, float_format=FLOAT_FORMAT)
    print(delta.to_string(index=False, float_format=lambda v: f"{v:.3f}"))
    return EXIT_OK


def cmd_report(args: argparse.Namespace, config: PipelineConfig) -> int:
    """Re-render every text report from the CSV files in the output directory"""
    out = config.run.out
    dataset = config.run.dataset
    sections = []
    if (out / "corpus_stats.csv").exists():
        stats = pd.read_csv(out / "corpus_stats.csv")
        sections.append(f"Corpus statistics\n{render_corpus_table({dataset: stats})}")
    if (out / "label_agreement.csv").exists():
        agreement = pd.read_csv(out / "label_agreement.csv")
        if agreement.empty:
            sections.append("Scorer agreement\nno labelled messages")
        else:
            sections.append(f"Scorer agreement\n{render_label_table(agreement)}")
    for corpus in CORPORA:
        if grid_path(out, corpus).exists():
            grid = pd.read_csv(grid_path(out, corpus), keep_default_na=False, na_values=[""])
            sections.append(render_grid_table(grid, f"Best classifiers, {dataset} ({corpus})"))
    if (out / "grid_delta.csv").exists():
        delta = pd.read_csv(out / "grid_delta.csv")
        table = delta.to_string(index=False, float_format=lambda v: f"{v:.3f}")
        sections.append(f"Best F-score change after removing length outliers\n{table}")
    if not sections:
        raise InputDataError(f"No report files found in {out}")
    text = "\n\n".join(sections) + "\n"
    (out / "report.txt").write_text(text, encoding="utf-8")
    print(text, end="")
    return EXIT_OK


def cmd_synth(args: argparse.Namespace, config: PipelineConfig) -> int:
    """Write a synthetic dump with a planted sentiment signal"""
    comments = make_planted_corpus(
        n_messages=args.n_messages,
        seed=derive_seed(config.run.seed, "synth"),
        outlier_fraction=args.outlier_fraction,
        n_off_topic=args.n_off_topic,
        n_bots=args.n_bots,
        subreddit=args.subreddit,
    )
    write_dump(comments, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser of every subcommand"""
    parser = argparse.ArgumentParser(
        prog="reddit-sentiment",
        description="Sentiment labelling and classification of Covid-related Reddit comments",
    )
    parser.add_argument("--config", type=Path, help="INI config file")
    parser.add_argument("--seed", type=int, help="master seed")
    parser.add_argument("--out", type=Path, help="output directory")
    parser.add_argument("--dataset", help="dataset name, e.g. canada or uk")
    parser.add_argument("--jobs", type=int, help="parallel workers")
    parser.add_argument(
        "--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"]
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    ingest = subparsers.add_parser("ingest", help=cmd_ingest.__doc__)
    ingest.add_argument("dumps", nargs="+", type=Path, help="line-delimited JSON dumps (.zst ok)")
    ingest.add_argument("--band", help="length band MIN:MAX, default 11:249")
    ingest.set_defaults(handler=cmd_ingest)

    label = subparsers.add_parser("label", help=cmd_label.__doc__)
    label.add_argument("--thresholds", help="valence scorer thresholds POS:NEG")
    label.add_argument("--thresholds-b", help="polarity scorer thresholds POS:NEG")
    label.set_defaults(handler=cmd_label)

    sample = subparsers.add_parser("sample", help=cmd_sample.__doc__)
    sample.add_argument("--task-id", required=True)
    sample.add_argument("--n", type=int, default=30, help="group size")
    sample.add_argument("--corpus", choices=CORPORA, default="all")
    sample.add_argument("--consensus", help="only messages with this tool consensus label")
    sample.add_argument("--source", help="only messages of this dataset, e.g. Canada")
    sample.set_defaults(handler=cmd_sample)

    annotate = subparsers.add_parser("annotate", help=cmd_annotate.__doc__)
    annotate.add_argument("--task-id", required=True)
    annotate.add_argument("--annotator", required=True)
    annotate.set_defaults(handler=cmd_annotate)

    agree = subparsers.add_parser("agree", help=cmd_agree.__doc__)
    agree.add_argument("--task-id", required=True)
    agree.add_argument("--annotators", nargs=2, required=True, metavar=("A", "B"))
    agree.add_argument("--validity", action="store_true", help="compare with the tool labels")
    agree.add_argument(
        "--band",
        dest="restrict_band",
        action="store_true",
        help="add the group restricted to the band",
    )
    agree.set_defaults(handler=cmd_agree)

    evaluate = subparsers.add_parser("eval", help=cmd_eval.__doc__)
    evaluate.add_argument("--algorithms", help="comma separated subset of nb,svm,rf")
    evaluate.add_argument("--export-matrix", action="store_true", help="write the BOW matrix")
    evaluate.add_argument("--quiet", action="store_true", help="no progress bar")
    evaluate.set_defaults(handler=cmd_eval)

    report = subparsers.add_parser("report", help=cmd_report.__doc__)
    report.set_defaults(handler=cmd_report)

    synth = subparsers.add_parser("synth", help=cmd_synth.__doc__)
    synth.add_argument("output", type=Path)
    synth.add_argument("--n-messages", type=int, default=2000)
    synth.add_argument("--outlier-fraction", type=float, default=0.1)
    synth.add_argument("--n-off-topic", type=int, default=50)
    synth.add_argument("--n-bots", type=int, default=10)
    synth.add_argument("--subreddit", default="canada")
    synth.set_defaults(handler=cmd_synth)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one subcommand

    Returns:
        0 on success, 1 on an internal error, 2 on bad input or usage
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    logging.basicConfig(format=LOG_FORMAT, level=args.log_level, stream=sys.stderr)

    try:
        config = apply_overrides(load_config(args.config), _flag_overrides(args))
        config.run.out.mkdir(parents=True, exist_ok=True)
        write_config(config, config.run.out / EFFECTIVE_CONFIG_NAME)
        return args.handler(args, config)
    except InputDataError as e:
        logger.error("%s", e)
        logger.debug("Traceback", exc_info=True)
        return EXIT_INPUT
    except PipelineError as e:
        logger.error("%s", e)
        logger.debug("Traceback", exc_info=True)
        return EXIT_INTERNAL
    except Exception as e:
        logger.error("Internal error: %s", e)
        logger.debug("Traceback", exc_info=True)
        return EXIT_INTERNAL
