"""E8 root system, the (8,4) extended Hamming code, and their gluing.

Everything here is exact: roots are Fraction tuples, codewords are bit
tuples, and the Construction A lattice carries the 1/sqrt2 scaling as a
squared factor so the Gram matrix stays rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .constants import build_cmE8, build_hadamard, srE8_rows
from .matrix import ExactMatrix
from .roots import EnumerationRule, enumerate_roots

Root = tuple[Fraction, ...]


def gen_e8_roots() -> list[Root]:
    """All 240 E8 roots in the even coordinate system, sorted.

    112 integer roots (+-1, +-1 in two slots) and 128 half-integer
    roots (all +-1/2, even number of minus signs).
    """
    roots: list[Root] = []
    for i, j in combinations(range(8), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [Fraction(0)] * 8
                v[i] = Fraction(si)
                v[j] = Fraction(sj)
                roots.append(tuple(v))
    half = Fraction(1, 2)
    for mask in range(256):
        if bin(mask).count("1") % 2 == 0:
            roots.append(
                tuple(-half if mask & (1 << k) else half for k in range(8))
            )
    roots.sort()
    return roots


def norm_sq(v: Root) -> Fraction:
    return sum(x * x for x in v)


def _scaled_int_vectors(roots: list[Root]) -> list[tuple[int, ...]]:
    # doubling clears all denominators in the even coordinate system
    return [tuple(int(2 * x) for x in v) for v in roots]


def count_contact_pairs(roots: list[Root]) -> int:
    """Unordered root pairs at squared distance 2 (inner product 1)."""
    scaled = _scaled_int_vectors(roots)
    count = 0
    for a, b in combinations(scaled, 2):
        # squared distance 2 in original units = 8 after doubling
        if sum((x - y) ** 2 for x, y in zip(a, b)) == 8:
            count += 1
    return count


def inner_product_histogram(roots: list[Root]) -> dict[Fraction, int]:
    """Distribution of <a, b> over unordered distinct pairs."""
    scaled = _scaled_int_vectors(roots)
    hist: dict[Fraction, int] = {}
    for a, b in combinations(scaled, 2):
        ip = Fraction(sum(x * y for x, y in zip(a, b)), 4)
        hist[ip] = hist.get(ip, 0) + 1
    return hist


@dataclass(frozen=True)
class Hamming84:
    """The (8,4) extended Hamming code from a systematic generator."""

    generator: tuple[tuple[int, ...], ...]
    codewords: tuple[tuple[int, ...], ...]

    @classmethod
    def standard(cls) -> "Hamming84":
        gen = (
            (1, 0, 0, 0, 0, 1, 1, 1),
            (0, 1, 0, 0, 1, 0, 1, 1),
            (0, 0, 1, 0, 1, 1, 0, 1),
            (0, 0, 0, 1, 1, 1, 1, 0),
        )
        words = set()
        for mask in range(16):
            w = [0] * 8
            for bit, row in enumerate(gen):
                if mask & (1 << bit):
                    w = [(a + b) % 2 for a, b in zip(w, row)]
            words.add(tuple(w))
        return cls(gen, tuple(sorted(words)))

    def weight_enumerator(self) -> dict[int, int]:
        dist: dict[int, int] = {}
        for w in self.codewords:
            k = sum(w)
            dist[k] = dist.get(k, 0) + 1
        return dist

    def min_distance(self) -> int:
        return min(sum(w) for w in self.codewords if any(w))

    def is_self_dual(self) -> bool:
        return all(
            sum(a * b for a, b in zip(u, v)) % 2 == 0
            for u in self.generator
            for v in self.generator
        ) and len(self.codewords) == 16

    def is_doubly_even(self) -> bool:
        return all(sum(w) % 4 == 0 for w in self.codewords)


def hamming84() -> Hamming84:
    return Hamming84.standard()


@dataclass(frozen=True)
class ConstructionAReport:
    basis: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    gram_det: Fraction
    is_even: bool
    is_positive_definite: bool
    minimal_vector_count: int


def construction_a(code: Hamming84 | None = None) -> ConstructionAReport:
    """Scaled Construction A lattice {x in Z^8 : x mod 2 in C} / sqrt2.

    The 1/sqrt2 never materializes: the Gram matrix is B*B^T / 2, which
    is integral because the code is self-dual.  For the extended Hamming
    code the result is an even unimodular lattice with 240 minimal
    vectors of squared norm 2, the E8 lattice.
    """
    code = code or hamming84()
    if len(code.codewords) != 16 or any(len(w) != 8 for w in code.codewords):
        raise ValueError("Construction A here expects an (8,4) binary code")
    if not code.is_self_dual() or not code.is_doubly_even():
        raise ValueError("code must be self-dual and doubly even")

    # GF(2) row reduction to find pivot columns of the generator
    reduced = [list(row) for row in code.generator]
    pivots: list[int] = []
    r = 0
    for col in range(8):
        pivot = next((i for i in range(r, len(reduced)) if reduced[i][col]), None)
        if pivot is None:
            continue
        reduced[r], reduced[pivot] = reduced[pivot], reduced[r]
        for i in range(len(reduced)):
            if i != r and reduced[i][col]:
                reduced[i] = [(a + b) % 2 for a, b in zip(reduced[i], reduced[r])]
        pivots.append(col)
        r += 1
    if r != 4:
        raise ValueError("generator must have rank 4")

    basis = [tuple(row) for row in reduced]
    for col in range(8):
        if col not in pivots:
            basis.append(tuple(2 if k == col else 0 for k in range(8)))
    basis_t = tuple(basis)

    gram = tuple(
        tuple(Fraction(sum(a * b for a, b in zip(u, v)), 2) for v in basis_t)
        for u in basis_t
    )
    gram_m = ExactMatrix([[Fraction(x) for x in row] for row in gram])
    det = gram_m.det().scalar_part()
    if det.b != 0:
        raise AssertionError("Gram determinant left the rationals")
    gram_det = det.a

    is_even = all(
        gram[i][i].denominator == 1 and gram[i][i] % 2 == 0 for i in range(8)
    ) and all(g.denominator == 1 for row in gram for g in row)

    pos_def = True
    for k in range(1, 9):
        minor = ExactMatrix([[Fraction(gram[i][j]) for j in range(k)] for i in range(k)])
        if minor.det().scalar_part().sign() <= 0:
            pos_def = False
            break

    codeset = set(code.codewords)
    count = _count_minimal(codeset)
    return ConstructionAReport(basis_t, gram, gram_det, is_even, pos_def, count)


def _count_minimal(codeset: set[tuple[int, ...]]) -> int:
    """Vectors x in Z^8 with x mod 2 in the code and |x|^2 = 4.

    Any coordinate beyond +-2 already exceeds the norm budget, so the
    search space is finite and small.
    """
    count = 0

    def walk(pos: int, budget: int, prefix: list[int]) -> None:
        nonlocal count
        if pos == 8:
            if budget == 0 and tuple(c % 2 for c in prefix) in codeset:
                count += 1
            return
        for c in (-2, -1, 0, 1, 2):
            if c * c <= budget:
                prefix.append(c)
                walk(pos + 1, budget - c * c, prefix)
                prefix.pop()

    walk(0, 4, [])
    return count


@dataclass(frozen=True)
class HadamardCorrespondence:
    mapped: tuple[tuple[int, ...], ...]
    weight_enumerator_matches: bool
    permutation: tuple[int, ...] | None
    holds: bool


def hadamard_code_correspondence() -> HadamardCorrespondence:
    """Sylvester Hadamard rows and their negations, under (1 - s)/2,
    form the extended Hamming codeword set up to one column permutation.

    The permutation sigma reads source column sigma[j] into position j.
    """
    H = build_hadamard(3)
    mapped: set[tuple[int, ...]] = set()
    for row in H.rows:
        bits = tuple((1 - int(e.scalar_part().a)) // 2 for e in row)
        mapped.add(bits)
        mapped.add(tuple(1 - b for b in bits))
    mapped_t = tuple(sorted(mapped))

    code = hamming84()
    target = set(code.codewords)

    def enumerator(words) -> dict[int, int]:
        dist: dict[int, int] = {}
        for w in words:
            dist[sum(w)] = dist.get(sum(w), 0) + 1
        return dist

    we_match = enumerator(mapped_t) == enumerator(target)

    permutation = _find_column_permutation(mapped_t, code.codewords) if we_match else None
    holds = permutation is not None and {
        tuple(w[c] for c in permutation) for w in mapped_t
    } == target
    return HadamardCorrespondence(mapped_t, we_match, permutation, holds)


def _find_column_permutation(
    source: tuple[tuple[int, ...], ...], target: tuple[tuple[int, ...], ...]
) -> tuple[int, ...] | None:
    """Backtracking search with prefix pruning over 16-word codes."""
    n = len(source[0])
    target_prefixes = [
        sorted(w[:k] for w in target) for k in range(n + 1)
    ]

    def extend(chosen: list[int], used: set[int]) -> tuple[int, ...] | None:
        k = len(chosen)
        if k == n:
            return tuple(chosen)
        for col in range(n):
            if col in used:
                continue
            chosen.append(col)
            used.add(col)
            prefix = sorted(tuple(w[c] for c in chosen) for w in source)
            if prefix == target_prefixes[k + 1]:
                full = extend(chosen, used)
                if full is not None:
                    return full
            chosen.pop()
            used.remove(col)
        return None

    return extend([], set())


@dataclass(frozen=True)
class VertexCoordCheck:
    coord_count: int
    norms_all_two: bool
    set_matches_roots: bool
    inner_histogram_matches: bool


def e8_vertex_coords() -> list[Root]:
    """Signed images of the enumerated positive roots through srE8."""
    rule = EnumerationRule(mode="normalized-pairing", max_height=30)
    records = enumerate_roots(build_cmE8(), rule)
    rows = srE8_rows()
    coords: list[Root] = []
    for rec in records:
        v = tuple(
            sum((Fraction(c) * rows[i][k] for i, c in enumerate(rec.coeffs)), Fraction(0))
            for k in range(8)
        )
        coords.append(v)
        coords.append(tuple(-x for x in v))
    coords.sort()
    return coords


def check_vertex_coords() -> VertexCoordCheck:
    coords = e8_vertex_coords()
    roots = gen_e8_roots()
    norms_ok = all(norm_sq(v) == 2 for v in coords)
    set_ok = sorted(coords) == roots
    hist_ok = inner_product_histogram(coords) == inner_product_histogram(roots)
    return VertexCoordCheck(len(coords), norms_ok, set_ok, hist_ok)


def e8_height_histogram() -> dict[int, int]:
    """Height distribution of E8 positive roots, derived from the root
    coordinates alone; independent oracle for the enumeration rule."""
    rows = srE8_rows()
    basis = ExactMatrix([[Fraction(x) for x in row] for row in rows])
    inv = basis.inverse()
    inv_rows = []
    for row in inv.rows:
        parts = [e.scalar_part() for e in row]
        if any(not p.is_rational() for p in parts):
            raise AssertionError("rational basis produced an irrational inverse")
        inv_rows.append([p.a for p in parts])
    hist: dict[int, int] = {}
    for root in gen_e8_roots():
        coeffs = [
            sum(root[k] * inv_rows[k][i] for k in range(8)) for i in range(8)
        ]
        if any(c.denominator != 1 for c in coeffs):
            raise AssertionError("root left the integral span of the basis")
        if all(c >= 0 for c in coeffs):
            h = int(sum(coeffs))
            hist[h] = hist.get(h, 0) + 1
    return hist
