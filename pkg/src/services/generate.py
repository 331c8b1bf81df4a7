"""Template expansion, n-3 enumeration and the sufficiency witnesses."""

import logging
from collections.abc import Iterator, Sequence
from itertools import product

from joblib import Parallel, delayed

from src.config import get_settings
from src.models.graph import Graph
from src.models.structure import N_MINUS_3_STRUCTURES, StructureId
from src.models.template import CanonicalForm, SufficiencyFixture, Template
from src.models.twin import VertexType
from src.services.canonical import canonical_form
from src.services.structures import STRUCTURE_TEMPLATES, StructureTemplate
from src.services.twins import twin_decomposition
from src.utils.exceptions import (
    TemplateError,
    raise_cap_exceeded,
    raise_graph_error,
    raise_invalid_parameter,
)

logger = logging.getLogger(__name__)

ONE = VertexType.ONE
K = VertexType.K
N = VertexType.N


def _catalogue_entry(t: Template) -> StructureTemplate:
    entry = STRUCTURE_TEMPLATES.get(t.structure)
    if entry is None:
        raise_graph_error(
            TemplateError,
            f"{t.structure.value} has no structure graph",
            {"structure": t.structure.value},
        )
    edges = {frozenset(e) for e in t.quotient_edges}
    if len(t.types) != len(entry.roles) or edges != {frozenset(e) for e in entry.edges}:
        raise_graph_error(
            TemplateError,
            f"quotient does not match the {t.structure.value} structure graph",
            {"structure": t.structure.value},
        )
    if not entry.admits(t.types):
        raise_graph_error(
            TemplateError,
            f"types {[x.value for x in t.types]} violate the {t.structure.value} constraints",
            {"structure": t.structure.value, "types": [x.value for x in t.types]},
        )
    return entry


def make_template(
    structure: StructureId, types: Sequence[VertexType], sizes: Sequence[int]
) -> Template:
    """Template on the catalogue graph of structure."""
    entry = STRUCTURE_TEMPLATES[structure]
    return Template(
        structure=structure,
        quotient_edges=entry.edges,
        types=tuple(types),
        sizes=tuple(sizes),
    )


def _class_masks(sizes: Sequence[int]) -> list[int]:
    masks = []
    start = 0
    for size in sizes:
        masks.append(((1 << size) - 1) << start)
        start += size
    return masks


def expand(t: Template) -> Graph:
    """
    Build the graph with twin graph t.

    Class i takes the next sizes[i] vertex indices. Inside a class:
    a clique for K, no edges for N. A template edge joins every vertex
    of one class to every vertex of the other.

    Raises:
        TemplateError: Unknown structure, quotient edges differing from
            the structure graph, or types violating its constraints
    """
    _catalogue_entry(t)
    masks = _class_masks(t.sizes)
    rows = [0] * t.order
    for mask, vertex_type in zip(masks, t.types):
        if vertex_type is K:
            start = (mask & -mask).bit_length() - 1
            for v in range(start, start + mask.bit_count()):
                rows[v] |= mask & ~(1 << v)
    for a, b in t.quotient_edges:
        for side, other in ((masks[a], masks[b]), (masks[b], masks[a])):
            start = (side & -side).bit_length() - 1
            for v in range(start, start + side.bit_count()):
                rows[v] |= other
    return Graph(n=t.order, adj=tuple(rows))


def validate_template(t: Template) -> bool:
    """True iff the expansion's twin decomposition reproduces t exactly."""
    try:
        g = expand(t)
    except TemplateError:
        return False
    td = twin_decomposition(g)
    expected_classes = []
    start = 0
    for size in t.sizes:
        expected_classes.append(tuple(range(start, start + size)))
        start += size
    if td.classes != tuple(expected_classes) or td.types != t.types:
        return False
    return td.quotient.adj == Graph.from_edges(len(t.types), t.quotient_edges).adj


def _compositions(total: int, parts: int, minimum: int) -> Iterator[tuple[int, ...]]:
    """Ordered splits of total into parts integers >= minimum, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first, *rest)


def enumerate_templates(structure: StructureId, n: int) -> Iterator[Template]:
    """
    Every valid (types, sizes) assignment of structure with order n.

    Types run over (1, K, N)^k in that order; sizes of the blown-up
    classes run over compositions in lexicographic order. Templates
    whose expansion merges classes are dropped.
    """
    entry = STRUCTURE_TEMPLATES[structure]
    k = len(entry.roles)
    if n < k:
        return
    for types in product((ONE, K, N), repeat=k):
        if not entry.admits(types):
            continue
        blown = [i for i, t in enumerate(types) if t is not ONE]
        for split in _compositions(n - (k - len(blown)), len(blown), 2):
            sizes = [1] * k
            for i, size in zip(blown, split):
                sizes[i] = size
            template = make_template(structure, types, sizes)
            if validate_template(template):
                yield template
            else:
                logger.debug(f"{structure.value} {types} {sizes}: classes merge, skipped")


def _template_form(t: Template, cap: int) -> CanonicalForm:
    return canonical_form(expand(t), cap=cap)


def enumerate_n_minus_3(n: int, n_jobs: int | None = 1) -> list[CanonicalForm]:
    """
    All connected graphs of order n with β = n-3, as sorted canonical forms.

    Args:
        n: Order, 4 <= n <= settings.enumerate_cap
        n_jobs: joblib worker count; 1 runs in-process, None or -1 uses
            every CPU

    Raises:
        InvalidParameterError: If n < 4
        SearchCapExceededError: If n exceeds settings.enumerate_cap
    """
    if n < 4:
        raise_invalid_parameter(f"enumerate_n_minus_3 needs n >= 4, got {n}", {"n": n})
    cap = get_settings().enumerate_cap
    if n > cap:
        raise_cap_exceeded("enumerate_n_minus_3", n, cap)

    templates = [t for s in N_MINUS_3_STRUCTURES for t in enumerate_templates(s, n)]
    logger.info(f"expanding {len(templates)} templates of order {n}")
    forms = Parallel(n_jobs=n_jobs if n_jobs is not None else -1)(
        delayed(_template_form)(t, cap) for t in templates
    )
    return sorted(set(forms))


_WITNESSES: tuple[tuple[str, StructureId, tuple[VertexType, ...]], ...] = (
    ("G1", StructureId.G1, (N, N, ONE)),
    ("G2_a", StructureId.G2, (K, N, ONE)),
    ("G2_b", StructureId.G2, (K, ONE, N)),
    ("G3_H", StructureId.G3, (ONE, N, ONE, ONE)),
    ("G3_H1", StructureId.G3, (K, N, K, ONE)),
    ("G3_H2", StructureId.G3, (K, N, ONE, N)),
    ("G3_H3", StructureId.G3, (N, N, ONE, N)),
    ("G4", StructureId.G4, (ONE,) * 5),
    ("G5_H", StructureId.G5, (ONE,) * 5),
    ("G5_R", StructureId.G5, (K, K, K, ONE, ONE)),
    ("G6_H", StructureId.G6, (ONE,) * 5),
    ("G6_H1", StructureId.G6, (N, ONE, ONE, ONE, ONE)),
    ("G6_H2", StructureId.G6, (K, K, K, ONE, ONE)),
    ("G6_H3", StructureId.G6, (K, ONE, K, K, ONE)),
    ("G7_H", StructureId.G7, (ONE, ONE, K, ONE, ONE)),
    ("G7_R", StructureId.G7, (K, K, K, ONE, ONE)),
    ("G8_H", StructureId.G8, (N, ONE, K, ONE)),
    ("G8_R", StructureId.G8, (N, K, K, ONE)),
    ("G9", StructureId.G9, (K, K, ONE, ONE)),
    ("G10_H", StructureId.G10, (ONE, K, K, ONE, ONE)),
    ("G10_R", StructureId.G10, (K, K, K, ONE, ONE)),
    ("D3_P4", StructureId.D3_P4A, (ONE,) * 4),
    ("D3_P4_leaf", StructureId.D3_P4A, (K, ONE, ONE, ONE)),
    ("D3_P4b", StructureId.D3_P4B, (ONE, K, K, ONE)),
    ("D3_P4c", StructureId.D3_P4C, (N, ONE, N, ONE)),
    ("D3_P4d", StructureId.D3_P4D, (N, K, N, ONE)),
    ("D3_Pprime", StructureId.D3_PPRIME, (ONE,) * 5),
    ("D3_Pprime_K", StructureId.D3_PPRIME, (ONE, K, K, ONE, ONE)),
)


def sufficiency_fixtures() -> list[SufficiencyFixture]:
    """
    Witness graphs for every n-3 structure, blown-up classes at size 2.

    Each has expected β = n-3 and is listed in a fixed order.
    """
    fixtures = []
    for name, structure, types in _WITNESSES:
        template = make_template(structure, types, [1 if t is ONE else 2 for t in types])
        graph = expand(template)
        fixtures.append(
            SufficiencyFixture(
                name=name, template=template, graph=graph, expected_beta=graph.n - 3
            )
        )
    return fixtures
