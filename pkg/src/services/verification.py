"""Exhaustive check of the characterizations against the exact oracle."""

import logging
from collections import Counter
from collections.abc import Iterable, Iterator

from joblib import Parallel, delayed
from tqdm import tqdm

from src.models.errors import ErrorRecord
from src.models.graph import Graph
from src.models.report import (
    Check,
    Failure,
    GraphVerdict,
    StructureCount,
    VerificationSummary,
)
from src.models.structure import Family, StructureId
from src.services.canonical import connected_graphs
from src.services.characterize import classify
from src.services.graph6 import parse_graph6
from src.services.metrics import is_connected
from src.services.resolving import metric_dimension, verify_bounds
from src.services.twins import (
    quotient_dimension_bound,
    quotient_distance_check,
    twin_decomposition,
)
from src.utils.exceptions import GraphToolError

logger = logging.getLogger(__name__)


def ground_truth_stream(max_n: int, min_n: int = 2) -> Iterator[tuple[int, str]]:
    """(line, graph6) for every connected graph of order min_n..max_n."""
    line = 0
    for n in range(min_n, max_n + 1):
        for form in connected_graphs(n):
            line += 1
            yield line, form


def _verdict(line: int, text: str, g: Graph) -> GraphVerdict:
    result = metric_dimension(g)
    classification = classify(g)
    families = classification.families()
    failures: list[Failure] = []

    for family in Family:
        if family is Family.N_MINUS_2 and g.n < 4:
            continue
        predicted = family in families
        actual = result.beta == family.beta_for(g.n)
        if predicted != actual:
            failures.append(
                Failure(
                    check=Check.FAMILY_MISMATCH,
                    message=f"{family.value}: classified={predicted}, beta={result.beta}",
                )
            )
    if not classification.consistent:
        failures.append(Failure(check=Check.INCONSISTENT, message="predictions disagree"))
    if not verify_bounds(g, result):
        failures.append(Failure(check=Check.BOUNDS, message=f"beta={result.beta} out of bounds"))

    td = twin_decomposition(g)
    if not quotient_distance_check(g, td):
        failures.append(Failure(check=Check.QUOTIENT_DISTANCE, message="d_G* differs from d_G"))
    if not quotient_dimension_bound(g):
        failures.append(
            Failure(check=Check.QUOTIENT_DIMENSION, message="beta exceeds twin-graph bound")
        )

    return GraphVerdict(
        line=line,
        graph6=text,
        n=g.n,
        beta=result.beta,
        structures=[m.structure.value for m in classification.matches],
        failures=failures,
        quotient_has_twins=twin_decomposition(td.quotient).quotient.n != td.quotient.n,
    )


def verify_graph(line: int, text: str) -> GraphVerdict | ErrorRecord | None:
    """
    Compare the oracle β of one graph with every family prediction.

    A family mismatch is "classified into the family" differing from
    "β equals the family's value". Returns None for graphs outside the
    theorem's scope (disconnected or a single vertex) and an
    ErrorRecord for lines that do not parse or that a search refuses,
    such as graphs above the pruned search cap.
    """
    try:
        g = parse_graph6(text)
        if g.n < 2 or not is_connected(g):
            logger.info(f"line {line}: skipping {text} (disconnected or n < 2)")
            return None
        return _verdict(line, text, g)
    except GraphToolError as e:
        logger.warning(f"line {line}: {e.code.value}: {e.message}")
        return e.to_record(line)


def run_verification(
    items: Iterable[tuple[int, str]],
    n_jobs: int | None = 1,
    progress: bool = False,
    total: int | None = None,
) -> tuple[VerificationSummary, list[ErrorRecord]]:
    """
    Verify every (line, graph6) item and aggregate the verdicts.

    Results come back in input order whatever the worker count, so the
    summary is deterministic.

    Args:
        items: (line number, graph6 text) pairs
        n_jobs: joblib worker count; None or -1 uses every CPU
        progress: Show a tqdm bar on stderr
        total: Item count for the progress bar, if known

    Returns:
        The summary and the error records of lines that failed to parse
    """
    results = Parallel(n_jobs=n_jobs if n_jobs is not None else -1, return_as="generator")(
        delayed(verify_graph)(line, text) for line, text in items
    )
    if progress:
        results = tqdm(results, total=total, desc="verify", unit="graph")

    summary = VerificationSummary()
    errors: list[ErrorRecord] = []
    hits: Counter[tuple[int, str, str]] = Counter()
    for outcome in results:
        if outcome is None:
            summary.skipped += 1
            continue
        if isinstance(outcome, ErrorRecord):
            errors.append(outcome)
            continue

        summary.graphs += 1
        if outcome.quotient_has_twins:
            summary.quotient_with_twins += 1
        for structure in outcome.structures:
            family = StructureId(structure).family.value
            hits[(outcome.n, family, structure)] += 1
        if outcome.passed:
            continue
        checks = {f.check for f in outcome.failures}
        if Check.FAMILY_MISMATCH in checks:
            summary.mismatches += 1
        if Check.INCONSISTENT in checks:
            summary.inconsistent += 1
        if checks - {Check.FAMILY_MISMATCH, Check.INCONSISTENT}:
            summary.violations += 1
        summary.counterexamples.append(outcome)
        logger.warning(
            f"counterexample line {outcome.line} {outcome.graph6}: "
            f"{[f.message for f in outcome.failures]}"
        )

    summary.errors = len(errors)
    summary.counts = [
        StructureCount(n=n, family=family, structure=structure, hits=count)
        for (n, family, structure), count in sorted(hits.items())
    ]
    logger.info(
        f"verified {summary.graphs} graphs: {summary.mismatches} mismatches, "
        f"{summary.inconsistent} inconsistent, {summary.violations} violations"
    )
    return summary, errors
