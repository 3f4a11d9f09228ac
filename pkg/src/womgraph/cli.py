"""Command-line surface: one subcommand per library capability.

Every subcommand reads files, writes a deterministic tab-separated (or
line-delimited) artifact, and exits nonzero with a diagnostic on any
error without leaving partial output behind.
"""

import argparse
import os
import sys

from . import authority, campaign, evalmetrics, relevance, structure, synth
from .config import resolve_config
from .errors import WomGraphError
from .graph import (
    InteractionGraph,
    ReactionWeights,
    build_interaction_graph,
    degree_distribution,
    export_graph,
)
from .ingest import (
    Preprocessor,
    load_stem_rules,
    load_word_list,
    parse_activity_log,
    serialize_activity_log,
)
from .model import GroupActivityLog


def _write_output(path, text: str) -> None:
    """Write atomically; partial files never appear under ``path``."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _load_log(path) -> GroupActivityLog:
    with open(path, encoding="utf-8") as fh:
        return parse_activity_log(fh)


def _preprocessor(cfg) -> Preprocessor:
    stopwords = load_word_list(cfg.stopwords_path) if cfg.stopwords_path else None
    rules = load_stem_rules(cfg.stem_rules_path) if cfg.stem_rules_path else None
    return Preprocessor(stopwords, rules)


def _weights(cfg) -> ReactionWeights:
    return ReactionWeights(
        like_on_comment=cfg.weight_like_on_comment,
        like=cfg.weight_like,
        comment_reaction=cfg.weight_comment,
        share=cfg.weight_share,
    )


def _topic_words(args, cfg, pre) -> list[str]:
    raw = args.topic if getattr(args, "topic", None) else cfg.topic
    if not raw:
        return []
    return sorted(set(pre(raw)))


def _table(args):
    if getattr(args, "table", None):
        return relevance.load_table(args.table)
    return relevance.empty_table()


def _graph(args, cfg, log) -> InteractionGraph:
    pre = _preprocessor(cfg)
    topic = _topic_words(args, cfg, pre)
    return build_interaction_graph(
        log, topic, _table(args), _weights(cfg), cfg.alpha, pre, workers=cfg.workers
    )


def _ranking(args, cfg, log, graph):
    scores = campaign.run_method(graph, args.method, log)
    return scores, authority.full_ranking(scores)


def _fmt(value: float) -> str:
    return repr(value)


# ---------------------------------------------------------------- subcommands

def cmd_ingest_validate(args, cfg):
    log = _load_log(args.log)
    out = (
        f"users\t{len(log.users)}\n"
        f"contents\t{len(log.contents)}\n"
        f"reactions\t{len(log.reactions)}\n"
    )
    _write_output(args.out, out)


def cmd_build_table(args, cfg):
    pre = _preprocessor(cfg)
    with open(args.corpus, encoding="utf-8") as fh:
        corpus = [pre(line) for line in fh]
    table = relevance.build_relatedness_table(corpus, cfg.min_pair_count, cfg.top_n_per_word)
    tmp = f"{args.out}.tmp" if args.out and args.out != "-" else None
    if tmp is None:
        import io

        buf = io.StringIO()
        _dump_table(table, buf)
        sys.stdout.write(buf.getvalue())
    else:
        with open(tmp, "w", encoding="utf-8") as fh:
            _dump_table(table, fh)
        os.replace(tmp, args.out)


def _dump_table(table, fh):
    fh.write(f"#self_sim\t{table.self_sim!r}\n")
    for word in sorted(table.vocab):
        fh.write(f"#vocab\t{word}\n")
    for (x, y) in sorted(table.entries):
        fh.write(f"{x}\t{y}\t{table.entries[(x, y)]!r}\n")


def cmd_relevance(args, cfg):
    log = _load_log(args.log)
    pre = _preprocessor(cfg)
    topic = _topic_words(args, cfg, pre)
    table = _table(args)
    lines = []
    for c in log.contents:
        rel = relevance.content_relevance(pre(c.text), topic, table)
        boost = relevance.boosted_relevance(rel, cfg.alpha)
        lines.append(f"{c.content_id}\t{_fmt(rel)}\t{_fmt(boost)}")
    _write_output(args.out, "\n".join(lines) + "\n" if lines else "")


def cmd_graph(args, cfg):
    log = _load_log(args.log)
    graph = _graph(args, cfg, log)
    if args.stats:
        hist = degree_distribution(graph, args.stats)
        lines = [
            f"{d}\t{hist.buckets[d]}\t{_fmt(hist.ccdf[d])}" for d in sorted(hist.buckets)
        ]
        _write_output(args.out, "\n".join(lines) + "\n" if lines else "")
    else:
        _write_output(args.out, export_graph(graph, "edge-list"))


def cmd_export(args, cfg):
    log = _load_log(args.log)
    graph = _graph(args, cfg, log)
    _write_output(args.out, export_graph(graph, args.format))


def cmd_rank(args, cfg):
    log = _load_log(args.log)
    graph = _graph(args, cfg, log)
    _, ranking = _ranking(args, cfg, log, graph)
    lines = [f"{u}\t{_fmt(s)}\t{i}" for i, (u, s) in enumerate(ranking, start=1)]
    _write_output(args.out, "\n".join(lines) + "\n" if lines else "")


def cmd_bowtie(args, cfg):
    log = _load_log(args.log)
    graph = _graph(args, cfg, log)
    decomp = structure.bowtie_decompose(graph)
    fractions = decomp.fractions()
    lines = []
    for name, members in decomp.classes().items():
        lines.append(f"{name}\t{len(members)}\t{_fmt(fractions[name])}")
    if args.members:
        for name, members in decomp.classes().items():
            for u in sorted(members):
                lines.append(f"{u}\t{name}")
    _write_output(args.out, "\n".join(lines) + "\n")


def cmd_wcc(args, cfg):
    log = _load_log(args.log)
    graph = _graph(args, cfg, log)
    groups = structure.weakly_connected_components(graph)
    lines = []
    for idx, g in enumerate(groups):
        lines.append(f"# component\t{idx}\tsize\t{g.size}")
        for u in sorted(g.members):
            lines.append(f"{u}\t{idx}")
    _write_output(args.out, "\n".join(lines) + "\n" if lines else "")


def cmd_campaign(args, cfg):
    log = _load_log(args.log)
    graph = _graph(args, cfg, log)
    scores, ranking = _ranking(args, cfg, log, graph)
    params = campaign.ReinforcementParams(k=cfg.k, r=cfg.r, th=cfg.th)
    plan = campaign.reinforced_selection(graph, scores, params)
    selected = {u for a in plan.assignments for u in a.influencers}
    plan.coverage = campaign.coverage_estimate(graph, selected) if selected else 0.0
    bands = [(1, 200), (201, 500), (501, 1000)]
    profiles = campaign.monthly_activity_profile(log, ranking, bands, "posts")
    plan.recommended_months = campaign.best_promotion_window(profiles, top_m=3)

    lines = ["# global top-k"]
    lines += [f"{u}\t{_fmt(s)}\t{i}" for i, (u, s) in enumerate(plan.global_topk, start=1)]
    lines.append("# assignments")
    for a in plan.assignments:
        flag = ",".join(a.below_global_topk) or "-"
        lines.append(
            f"subgroup\t{min(a.subgroup.members)}\t{a.subgroup.size}\t"
            f"{','.join(a.influencers)}\t{flag}"
        )
    lines.append("# skipped")
    for g, reason in plan.skipped:
        lines.append(f"subgroup\t{min(g.members)}\t{g.size}\t{reason}")
    lines.append(f"# coverage\t{_fmt(plan.coverage)}")
    lines.append(f"# months\t{','.join(str(m) for m in plan.recommended_months)}")
    _write_output(args.out, "\n".join(lines) + "\n")


def cmd_coverage(args, cfg):
    log = _load_log(args.log)
    graph = _graph(args, cfg, log)
    if args.users:
        with open(args.users, encoding="utf-8") as fh:
            selected = {line.strip() for line in fh if line.strip()}
    else:
        scores, _ = _ranking(args, cfg, log, graph)
        selected = {u for u, _ in authority.top_k(scores, cfg.k)}
    frac = campaign.coverage_estimate(graph, selected)
    _write_output(args.out, f"coverage\t{_fmt(frac)}\n")


def _parse_bands(raw: str):
    bands = []
    for part in raw.split(","):
        lo, _, hi = part.partition("-")
        bands.append((int(lo), int(hi)))
    return bands


def cmd_profile(args, cfg):
    log = _load_log(args.log)
    graph = _graph(args, cfg, log)
    _, ranking = _ranking(args, cfg, log, graph)
    bands = _parse_bands(args.bands)
    profiles = campaign.monthly_activity_profile(log, ranking, bands, args.event)
    lines = []
    for p in profiles:
        for m in range(1, 13):
            lines.append(f"{p.label}\t{m}\t{_fmt(p.probabilities[m])}")
    months = campaign.best_promotion_window(profiles, top_m=3)
    lines.append(f"# months\t{','.join(str(m) for m in months)}")
    _write_output(args.out, "\n".join(lines) + "\n")


def cmd_eval(args, cfg):
    log = _load_log(args.log)
    graph = _graph(args, cfg, log)
    pre = _preprocessor(cfg)
    topic = _topic_words(args, cfg, pre)
    table = _table(args)
    methods = [args.method] if args.method else list(campaign.METHODS)
    k_values = [int(k) for k in args.k_values.split(",")] if args.k_values else [cfg.k]
    rows = evalmetrics.correlation_report(
        graph, log, topic, table, methods, k_values, _weights(cfg), pre,
        rank_based=args.rank_based,
    )
    lines = ["method\tk\tcorr_votes\tcorr_topical_votes"]
    for row in rows:
        lines.append(
            f"{row['method']}\t{row['k']}\t{_fmt(row['corr_votes'])}\t"
            f"{_fmt(row['corr_topical_votes'])}"
        )
    if args.labels:
        labels = {}
        with open(args.labels, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    user, grade = line.split("\t")
                    labels[user] = int(grade)
        lines.append("method\tcutoff\tmap\tndcg")
        for method in methods:
            scores = campaign.run_method(graph, method, log)
            ranking = authority.full_ranking(scores)
            ap = evalmetrics.average_precision(ranking, labels, cfg.k)
            nd = evalmetrics.ndcg(ranking, labels, cfg.k)
            lines.append(f"{method}\t{cfg.k}\t{_fmt(ap)}\t{_fmt(nd)}")
    _write_output(args.out, "\n".join(lines) + "\n")


def cmd_topics(args, cfg):
    log = _load_log(args.log)
    terms = campaign.extract_popular_topics(log, args.n, _preprocessor(cfg))
    lines = [f"{term}\t{count}" for term, count in terms]
    _write_output(args.out, "\n".join(lines) + "\n" if lines else "")


def cmd_synth(args, cfg):
    seasonality = (
        tuple(float(x) for x in args.seasonality.split(","))
        if args.seasonality
        else tuple([1 / 12.0] * 12)
    )
    params = synth.SynthesisParams(
        n_users=args.users,
        n_posts=args.posts,
        n_comments=args.comments,
        n_reactions=args.reactions,
        react_only_bias=args.bias,
        pa_strength=args.strength,
        seasonality=seasonality,
        seed=cfg.seed if args.seed is None else args.seed,
    )
    log = synth.synth_generate(params)
    _write_output(args.out, serialize_activity_log(log))


# ------------------------------------------------------------------- parsing

def _add_common(sub, *flags):
    if "log" in flags:
        sub.add_argument("--log", required=True, help="activity log file")
    if "table" in flags:
        sub.add_argument("--table", help="relatedness table file")
    if "topic" in flags:
        sub.add_argument("--topic", help="topic words, whitespace separated")
    if "method" in flags:
        sub.add_argument(
            "--method", default="pagerank", choices=campaign.METHODS, help="authority measure"
        )
    sub.add_argument("--out", help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="womgraph",
        description="Topic-sensitive influencer analysis for online social groups",
    )
    parser.add_argument("--config", help="config file (or set WOMGRAPH_CONFIG)")
    parser.add_argument("--alpha", type=float, help="relevance boost factor")
    parser.add_argument("--k", type=int, help="influencer budget")
    parser.add_argument("--r", type=int, help="reinforcement level")
    parser.add_argument("--th", type=int, help="minimum sub-group size")
    parser.add_argument("--seed", type=int, help="rng seed", dest="global_seed")
    parser.add_argument("--workers", type=int, help="worker count for graph build")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ingest-validate", help="parse and validate an activity log")
    _add_common(s, "log")
    s.set_defaults(func=cmd_ingest_validate)

    s = sub.add_parser("build-table", help="build the word relatedness table")
    s.add_argument("--corpus", required=True, help="one raw-text document per line")
    s.add_argument("--out", help="output path (default stdout)")
    s.set_defaults(func=cmd_build_table)

    s = sub.add_parser("relevance", help="score content relevance and boost")
    _add_common(s, "log", "table", "topic")
    s.set_defaults(func=cmd_relevance)

    s = sub.add_parser("graph", help="build the interaction graph")
    _add_common(s, "log", "table", "topic")
    s.add_argument("--stats", choices=["in", "out", "total"],
                   help="emit the degree histogram instead of the edge list")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("export", help="export the graph for external tools")
    _add_common(s, "log", "table", "topic")
    s.add_argument("--format", default="edge-list", choices=["edge-list", "dot"])
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("rank", help="rank users with an authority measure")
    _add_common(s, "log", "table", "topic", "method")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("bowtie", help="bow-tie decomposition report")
    _add_common(s, "log", "table", "topic")
    s.add_argument("--members", action="store_true", help="list per-user classes")
    s.set_defaults(func=cmd_bowtie)

    s = sub.add_parser("wcc", help="weakly connected components")
    _add_common(s, "log", "table", "topic")
    s.set_defaults(func=cmd_wcc)

    s = sub.add_parser("campaign", help="reinforced marketing plan")
    _add_common(s, "log", "table", "topic", "method")
    s.set_defaults(func=cmd_campaign)

    s = sub.add_parser("coverage", help="estimate influenced fraction")
    _add_common(s, "log", "table", "topic", "method")
    s.add_argument("--users", help="file of selected user ids, one per line")
    s.set_defaults(func=cmd_coverage)

    s = sub.add_parser("profile", help="monthly activity profiles per rank band")
    _add_common(s, "log", "table", "topic", "method")
    s.add_argument("--bands", default="1-200,201-500,501-1000")
    s.add_argument("--event", default="posts", choices=["posts", "reactions_received"])
    s.set_defaults(func=cmd_profile)

    s = sub.add_parser("eval", help="correlation / MAP / NDCG report")
    _add_common(s, "log", "table", "topic")
    s.add_argument("--method", choices=campaign.METHODS, help="restrict to one method")
    s.add_argument("--k-values", dest="k_values", help="comma-separated k list")
    s.add_argument("--labels", help="tab-separated user/grade ground truth")
    s.add_argument("--rank-based", action="store_true", dest="rank_based")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("topics", help="frequent terms across posts")
    _add_common(s, "log")
    s.add_argument("--n", type=int, default=20)
    s.set_defaults(func=cmd_topics)

    s = sub.add_parser("synth", help="generate a synthetic activity log")
    s.add_argument("--users", type=int, default=200)
    s.add_argument("--posts", type=int, default=100)
    s.add_argument("--comments", type=int, default=50)
    s.add_argument("--reactions", type=int, default=800)
    s.add_argument("--bias", type=float, default=6.0, help="react-only reactor odds")
    s.add_argument("--strength", type=float, default=0.5, help="preferential attachment")
    s.add_argument("--seasonality", help="12 comma-separated monthly weights")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--out", help="output path (default stdout)")
    s.set_defaults(func=cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {}
    for flag, key in (("alpha", "alpha"), ("k", "k"), ("r", "r"), ("th", "th"),
                      ("global_seed", "seed"), ("workers", "workers")):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[key] = value
    try:
        cfg = resolve_config(args.config, overrides)
        args.func(args, cfg)
    except WomGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
