"""
Verb handlers for the matchdim command line.

Each handler takes the parsed argparse namespace and returns an exit code:
0 on success, 1 when a verification or property check fails. Input errors
propagate as MatchDimError and are turned into exit code 2 by main().
"""
import sys
from argparse import Namespace
from typing import List

import structlog

from matchdim.cli.formats import canonical_json, read_graph, render, write_output
from matchdim.config import get_settings
from matchdim.exceptions import DocumentError
from matchdim.services.constructions import certificate, construct, dispatch_case
from matchdim.services.graph_ops import connected, s_suspension
from matchdim.services.invariants import invariant_profile, oracle_profile, profile_with_witnesses
from matchdim.services.verifier import run_lemma_suites, summarize, sweep_theorem

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _emit(payload) -> None:
    sys.stdout.write(canonical_json(payload) + "\n")


def cmd_construct(args: Namespace) -> int:
    """Build G_{a,b,c,d} and write it in the requested format."""
    a, b, c, d = args.a, args.b, args.c, args.d
    g = construct(a, b, c, d)
    summary = {
        "case": dispatch_case(a, b, c, d).value,
        "edges": g.edge_count,
        "n": g.n,
        "tuple": [a, b, c, d],
    }
    lines = [canonical_json(summary)]
    if args.witness:
        lines.append(canonical_json(certificate(a, b, c, d).witnesses.to_dict()))

    write_output(render(g, args.format), args.out)
    # The graph owns stdout unless it went to a file.
    summary_stream = sys.stdout if args.out else sys.stderr
    summary_stream.write("\n".join(lines) + "\n")
    logger.info("Graph constructed", tuple=[a, b, c, d], case=summary["case"], out=args.out)
    return EXIT_OK


def cmd_invariants(args: Namespace) -> int:
    """Print the profile of a graph file, optionally cross-checked by the oracle."""
    g = read_graph(args.path)
    if args.witness:
        profile, witnesses = profile_with_witnesses(g)
    else:
        profile, witnesses = invariant_profile(g), None

    payload = profile.model_dump()
    payload["connected"] = connected(g)
    if witnesses is not None:
        payload["witnesses"] = witnesses.to_dict()

    code = EXIT_OK
    if args.oracle:
        reference = oracle_profile(g)
        payload["oracle"] = reference.model_dump()
        payload["oracle_agrees"] = reference == profile
        if reference != profile:
            logger.warning("Oracle disagreement", computed=profile.as_tuple(), oracle=reference.as_tuple())
            code = EXIT_FAILED

    _emit(payload)
    return code


def cmd_verify(args: Namespace) -> int:
    """Stream one JSON line per tuple, then a summary line."""
    reports = sweep_theorem(args.max_b, args.d_slack, jobs=args.jobs)
    for report in reports:
        _emit(report.to_line(timings=args.timings))
    summary = summarize(reports)
    _emit({"summary": summary.model_dump()})
    return EXIT_OK if summary.all_passed else EXIT_FAILED


def _parse_vertex_set(text: str) -> List[int]:
    members = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            members.append(int(token))
        except ValueError:
            raise DocumentError(f"--set expects comma-separated vertex indices, got {token!r}")
    return members


def cmd_suspend(args: Namespace) -> int:
    """Write the S-suspension of a graph file."""
    g = read_graph(args.path)
    suspended = s_suspension(g, _parse_vertex_set(args.set))
    write_output(render(suspended, args.format), args.out)
    return EXIT_OK


def cmd_lemmas(args: Namespace) -> int:
    """Run every property suite over a seeded corpus; one JSON line per suite."""
    seed = args.seed if args.seed is not None else get_settings().lemma_seed
    results = run_lemma_suites(args.corpus_size, seed)
    for result in results:
        _emit(result.to_line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED
