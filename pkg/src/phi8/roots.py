"""Level-by-level positive root enumeration from a square pairing matrix.

The default rule is the crystallographic root-string condition: a
candidate beta + e_j is accepted iff p - <beta, j> >= 1, where p is the
largest m >= 0 with beta - m*e_j already found and <beta, j> is
2*(A*beta)_j / A_jj (normalized-pairing) or (A*beta)_j (raw-pairing).
All comparisons are exact.

The pair-coupling mode instead accepts a candidate iff its support is
connected in the coupling graph of nonzero off-diagonal entries and it
is not a multiple of a single generator.  This reproduces the behavior
of bracket generation where [x_i, x_j] = 0 exactly when the (i, j)
pairing entry vanishes and no other relation truncates a string.
"""
from __future__ import annotations

from dataclasses import dataclass

from .field import GoldenExt
from .matrix import ExactMatrix

MODES = ("normalized-pairing", "raw-pairing", "pair-coupling")


@dataclass(frozen=True)
class EnumerationRule:
    mode: str = "normalized-pairing"
    max_height: int = 10
    dedup: bool = True

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; choose from {MODES}")
        if self.max_height < 1:
            raise ValueError("max_height must be at least 1")


@dataclass(frozen=True)
class RootRecord:
    coeffs: tuple[int, ...]
    height: int
    weight: tuple[GoldenExt, ...]
    parents: tuple[tuple[int, int], ...]  # (index of parent record, simple root added)


def _weight(A: ExactMatrix, coeffs: tuple[int, ...]) -> tuple[GoldenExt, ...]:
    n = A.n
    return tuple(
        sum((A[j][i] * coeffs[i] for i in range(n) if coeffs[i]), GoldenExt(0))
        for j in range(n)
    )


def enumerate_roots(A: ExactMatrix, rule: EnumerationRule) -> list[RootRecord]:
    """All accepted positive roots with height <= rule.max_height.

    Records are sorted by (height, coeffs).  With dedup=True a root
    reached along several one-step extensions appears once with all its
    (parent, simple root) pairs; with dedup=False it appears once per
    acceptance event, single parent each, matching the raw listing of a
    generator-by-generator construction.
    """
    n = A.n
    if rule.mode == "normalized-pairing":
        for j in range(n):
            if not A[j][j]:
                raise ValueError(
                    f"zero diagonal at {j}: normalized-pairing undefined, use raw-pairing"
                )
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and (A[i][j] or A[j][i]):
                adjacency[i].add(j)
                adjacency[j].add(i)

    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found: dict[tuple[int, ...], int] = {c: 1 for c in simple}
    # events[coeffs] = list of (parent coeffs, j) acceptances, [] for simple roots
    events: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]] = {c: [] for c in simple}
    by_height: dict[int, list[tuple[int, ...]]] = {1: sorted(simple)}

    for h in range(1, rule.max_height):
        layer = by_height.get(h)
        if not layer:
            break
        next_layer: list[tuple[int, ...]] = []
        for beta in layer:
            support = [i for i in range(n) if beta[i]]
            for j in range(n):
                cand = tuple(c + (1 if k == j else 0) for k, c in enumerate(beta))
                if rule.mode == "pair-coupling":
                    if len(support) == 1:
                        accepted = j != support[0] and j in adjacency[support[0]]
                    else:
                        accepted = beta[j] > 0 or any(j in adjacency[s] for s in support)
                else:
                    pairing = sum(
                        (A[j][i] * beta[i] for i in range(n) if beta[i]), GoldenExt(0)
                    )
                    if rule.mode == "normalized-pairing":
                        pairing = pairing * 2 / A[j][j]
                    p = 0
                    while p < beta[j]:
                        lower = tuple(
                            c - (p + 1 if k == j else 0) for k, c in enumerate(beta)
                        )
                        if lower not in found:
                            break
                        p += 1
                    # accept iff p - pairing >= 1, decided exactly
                    accepted = (GoldenExt(p - 1) - pairing).sign() >= 0
                if not accepted:
                    continue
                if cand not in found:
                    found[cand] = h + 1
                    events[cand] = []
                    next_layer.append(cand)
                events[cand].append((beta, j))
        if next_layer:
            by_height[h + 1] = sorted(next_layer)

    ordered = sorted(found, key=lambda c: (found[c], c))
    weights = {c: _weight(A, c) for c in ordered}
    rows: list[tuple[tuple[int, ...], list[tuple[tuple[int, ...], int]]]] = []
    for coeffs in ordered:
        evs = events[coeffs]
        if rule.dedup or not evs:
            rows.append((coeffs, list(evs)))
        else:
            for ev in sorted(evs):
                rows.append((coeffs, [ev]))
    # parent indices point at the first record holding the parent coeffs
    first_index: dict[tuple[int, ...], int] = {}
    for pos, (coeffs, _) in enumerate(rows):
        first_index.setdefault(coeffs, pos)
    records: list[RootRecord] = []
    for coeffs, evs in rows:
        parent_pairs = tuple(sorted((first_index[p], j) for p, j in evs))
        records.append(RootRecord(coeffs, found[coeffs], weights[coeffs], parent_pairs))
    return records


def distinct_roots(records: list[RootRecord]) -> list[RootRecord]:
    """Collapse duplicate coefficient vectors, keeping first occurrence."""
    seen: set[tuple[int, ...]] = set()
    out = []
    for r in records:
        if r.coeffs not in seen:
            seen.add(r.coeffs)
            out.append(r)
    return out


def hasse_edges(records: list[RootRecord]) -> list[tuple[int, int, int]]:
    """Cover relations (parent index, child index, simple root index).

    Indices refer to the deduplicated, (height, coeffs)-sorted listing;
    an edge exists iff both beta and beta + e_j are present.
    """
    roots = distinct_roots(records)
    index = {r.coeffs: i for i, r in enumerate(roots)}
    edges = []
    for ci, r in enumerate(roots):
        for j in range(len(r.coeffs)):
            if r.coeffs[j] == 0:
                continue
            parent = tuple(c - (1 if k == j else 0) for k, c in enumerate(r.coeffs))
            pi = index.get(parent)
            if pi is not None:
                edges.append((pi, ci, j))
    edges.sort()
    return edges


def emit_hasse_dot(records: list[RootRecord]) -> str:
    """Graphviz DOT of the Hasse diagram, layered by height.

    Nodes are named r<height>_<k> with k the lexicographic position of
    the root inside its height layer.
    """
    roots = distinct_roots(records)
    names: dict[tuple[int, ...], str] = {}
    per_height: dict[int, int] = {}
    for r in roots:
        k = per_height.get(r.height, 0)
        per_height[r.height] = k + 1
        names[r.coeffs] = f"r{r.height}_{k}"
    lines = ["digraph hasse {", "  rankdir=BT;", '  node [shape=box, fontname="monospace"];']
    for h in sorted(per_height):
        members = [r for r in roots if r.height == h]
        decls = " ".join(
            f'{names[r.coeffs]} [label="{" ".join(str(c) for c in r.coeffs)}"];'
            for r in members
        )
        lines.append(f"  {{ rank=same; {decls} }}")
    for pi, ci, _ in hasse_edges(roots):
        lines.append(f"  {names[roots[pi].coeffs]} -> {names[roots[ci].coeffs]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def weights_table(records: list[RootRecord]) -> list[dict[str, object]]:
    """Per-root weight rendering with an integer-valuedness flag."""
    rows = []
    for r in records:
        integer = all(
            w.is_scalar() and w.scalar_part().is_integer() for w in r.weight
        )
        rows.append(
            {
                "coeffs": list(r.coeffs),
                "height": r.height,
                "weight": [str(w) for w in r.weight],
                "integer": integer,
            }
        )
    return rows


E8_POSITIVE_COUNT = 120


def summarize(records: list[RootRecord]) -> dict[str, object]:
    """Counts by height plus the E8 reference comparison.

    The reference count 120 is the number of positive roots of E8; the
    summary records whether the total and the cumulative count through
    height 8 reach it.
    """
    roots = distinct_roots(records)
    by_height: dict[int, int] = {}
    for r in roots:
        by_height[r.height] = by_height.get(r.height, 0) + 1
    cumulative: dict[int, int] = {}
    running = 0
    for h in sorted(by_height):
        running += by_height[h]
        cumulative[h] = running
    cum8 = sum(c for h, c in by_height.items() if h <= 8)
    weights_integer = all(
        all(w.is_scalar() and w.scalar_part().is_integer() for w in r.weight)
        for r in roots
    )
    return {
        "total": len(roots),
        "records": len(records),
        "max_height": max(by_height) if by_height else 0,
        "by_height": by_height,
        "cumulative": cumulative,
        "cumulative_through_8": cum8,
        "distinct_coeff_count": len(roots),
        "distinct_weight_count": len({r.weight for r in roots}),
        "weights_all_integer": weights_integer,
        "e8_reference": E8_POSITIVE_COUNT,
        "total_matches_e8": len(roots) == E8_POSITIVE_COUNT,
        "cumulative_8_matches_e8": cum8 == E8_POSITIVE_COUNT,
    }


def emit_csv(records: list[RootRecord]) -> str:
    """Deterministic CSV listing: index, height, coeffs, weight, parents."""
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "height", "coeffs", "weight", "parents"])
    for i, r in enumerate(records):
        writer.writerow(
            [
                i,
                r.height,
                " ".join(str(c) for c in r.coeffs),
                "; ".join(str(w) for w in r.weight),
                "; ".join(f"{p}+e{j}" for p, j in r.parents),
            ]
        )
    return buf.getvalue()
