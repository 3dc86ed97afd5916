"""Truncated induced modules over gl(n|n) with exact PBW straightening.

A module here is an induction ``U(g) ⊗_{U(p)} L`` presented on the PBW basis
``f_1^{a_1} ··· f_k^{a_k} ⊗ x``: the ``f_i`` run over an ordered list of
lowering root vectors (the complement of the inducing subalgebra ``p``) and
``x`` over a basis of a finite or truncated ``p``-module ``L`` (the
one-dimensional ``k_λ`` for Verma-type inductions, a tensor product of
small factors for parabolic ones).

Everything is graded by weight and truncated by a per-datum height
functional: the realization enumerates complete weight spaces for every
weight of height-depth at most ``depth`` and computes generator actions by
straightening, producing exact rational (in practice integral) matrices.
Actions whose target weight falls outside the region raise
:class:`TruncationOverflow` — results are never silently dropped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .borels import (
    Label,
    b_outer,
    height_functional,
    hypercube_label,
    normalize_label,
    positive_roots,
    simple_roots,
    star,
)
from .linalg import SparseRationalMatrix, kernel_basis
from .superalgebra import (
    Element,
    Root,
    Unit,
    Weight,
    all_roots,
    bracket,
    is_cartan,
    is_odd_root,
    root_of,
    root_weight,
    unit_parity,
)
from .weights import (
    Character,
    add_weights,
    common_odd_roots,
    from_tuple,
    par,
    sub_weights,
)

Vector = dict  # basis vector -> Fraction


class TruncationOverflow(RuntimeError):
    """An action left the truncation region of a realization."""

    def __init__(self, weight: Weight, needed: int, depth: int):
        super().__init__(
            f"action target at weight {weight} needs depth {needed} "
            f"but the realization is truncated at {depth}"
        )
        self.weight = weight
        self.needed = needed
        self.depth = depth


@dataclass(frozen=True)
class InductionDatum:
    """An induction problem: inducing subalgebra, PBW complement, anchor.

    ``inducing_roots`` are the roots of the inducing subalgebra (the Cartan
    is always included implicitly); ``levi_roots`` marks the subset acting
    through a genuine module rather than by zero.  ``complement_order`` fixes
    the PBW order.  ``hw`` anchors the truncation region and, for
    one-dimensional inductions, is the inflated weight.  ``heights`` define
    the truncation functional.
    """

    n: int
    inducing_roots: frozenset[Root]
    complement_order: tuple[Root, ...]
    hw: Weight
    parity_shift: int
    heights: tuple[int, ...]
    levi_roots: frozenset[Root] = field(default_factory=frozenset)

    def __post_init__(self):
        n = self.n
        every = set(all_roots(n))
        inducing = set(self.inducing_roots)
        complement = list(self.complement_order)
        if not self.levi_roots <= self.inducing_roots:
            raise ValueError("levi roots must be inducing roots")
        if inducing | set(complement) != every or inducing & set(complement):
            raise ValueError("inducing and complement roots must partition the roots")
        if len(complement) != len(set(complement)):
            raise ValueError("duplicate complement root")
        if len(self.hw) != 2 * n or len(self.heights) != 2 * n:
            raise ValueError("weight or height vector has wrong rank")
        # the inducing subalgebra is closed under the bracket
        for r1 in inducing:
            for r2 in inducing:
                for unit, _coef in bracket(n, r1, r2):
                    if not is_cartan(unit) and root_of(n, unit) not in inducing:
                        raise ValueError(
                            f"inducing set not closed: [{r1}, {r2}] leaves it"
                        )
        # the anchor weight kills every Cartan bracket of non-levi opposite
        # pairs, so it spans a one-dimensional module for the non-levi part
        for r in inducing:
            opposite = (r[1], r[0])
            if opposite not in inducing:
                continue
            if r in self.levi_roots and opposite in self.levi_roots:
                continue
            value = Fraction(0)
            for unit, coef in bracket(n, r, opposite):
                if is_cartan(unit):
                    value += coef * self.hw[unit[0] - 1]
            if value:
                raise ValueError(
                    f"anchor weight does not vanish on the Cartan bracket of "
                    f"{r} and {opposite}"
                )
        # every complement root must cost at least one unit of depth
        for r in complement:
            if self.root_cost(r) < 1:
                raise ValueError(f"complement root {r} has nonpositive depth cost")

    def xi(self, vec) -> int:
        return sum(h * v for h, v in zip(self.heights, vec, strict=True))

    def root_cost(self, root: Root) -> int:
        return -self.xi(root_weight(self.n, root))

    def depth_of(self, weight: Weight) -> int:
        return self.xi(sub_weights(self.hw, weight))

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "inducing_roots": sorted(map(list, self.inducing_roots)),
            "levi_roots": sorted(map(list, self.levi_roots)),
            "complement_order": [list(r) for r in self.complement_order],
            "hw": list(self.hw),
            "parity_shift": self.parity_shift,
            "heights": list(self.heights),
        }


# ---------------------------------------------------------------------------
# Levi modules: what sits in the right tensor slot of the induction.


class TrivialLevi:
    """The one-dimensional module k_hw: root vectors act by zero."""

    def __init__(self, n: int, hw: Weight):
        self.n = n
        self.hw = tuple(hw)
        self.states = [(self.hw, 0)]
        self.roots: frozenset[Root] = frozenset()

    def unit_terms(self, unit: Unit, state: int):
        return []


class Gl11Factor:
    """A two- or one-dimensional module over an embedded diagonal gl(1|1).

    Covers ambient coordinates (k, n+k).  Kinds:

    * ``verma_eps``: lowering direction delta_k - eps_k (top kills e_{k,n+k})
    * ``verma_delta``: lowering direction eps_k - delta_k
    * ``simple``: the simple head; one-dimensional when the tuple matches,
      otherwise the typical Verma (they coincide).

    Tuples here follow the rank-1 shifted-tuple convention, so
    ``verma_eps(a, b)`` has actual top weight fragment (a, -b) and
    ``verma_delta(a, b)`` has (a-1, -(b-1)).
    """

    def __init__(self, n: int, k: int, kind: str, a: int, b: int):
        if kind not in ("verma_eps", "verma_delta", "simple"):
            raise ValueError(f"unknown gl(1|1) factor kind {kind!r}")
        if kind == "simple" and a != b:
            kind = "verma_eps"  # typical simple = typical Verma
        self.n, self.k, self.kind, self.a, self.b = n, k, kind, a, b
        local_label: Label = (1,) if kind == "verma_delta" else ()
        top = from_tuple(1, (a, b), local_label)
        hw = [0] * (2 * n)
        hw[k - 1], hw[n + k - 1] = top
        self.hw = tuple(hw)
        if kind == "simple":
            self.states = [(self.hw, 0)]
            self.lower_unit = None
            self.raise_unit = None
        else:
            if kind == "verma_eps":
                self.lower_unit, self.raise_unit = (n + k, k), (k, n + k)
            else:
                self.lower_unit, self.raise_unit = (k, n + k), (n + k, k)
            drop = root_weight(n, root_of(n, self.lower_unit))
            self.states = [(self.hw, 0), (add_weights(self.hw, drop), 1)]
        self.roots = frozenset({(k, n + k), (n + k, k)})

    def unit_terms(self, unit: Unit, state: int):
        if unit == self.lower_unit and state == 0:
            return [(1, Fraction(1))]
        if unit == self.raise_unit and state == 1:
            return [(0, Fraction(self.a - self.b))]
        return []


class RealizationFactor:
    """A truncated realization of gl(m|m) embedded as a Levi block.

    ``coord_map`` sends local storage coordinates 1..2m to ambient storage
    coordinates; units and weights translate along it.
    """

    def __init__(self, realization: "Realization", n: int, coord_map: tuple[int, ...]):
        m = realization.datum.n
        if len(coord_map) != 2 * m:
            raise ValueError("coordinate map has wrong length")
        self.realization = realization
        self.n = n
        self.coord_map = coord_map
        self._to_local = {amb: loc + 1 for loc, amb in enumerate(coord_map)}
        self.hw = self._lift_weight(realization.datum.hw)
        self.states = []
        self._by_local: dict[tuple[Weight, int], int] = {}
        self._local_keys: list[tuple[Weight, int]] = []
        for w in sorted(realization.weight_spaces):
            for idx in range(len(realization.weight_spaces[w])):
                self._by_local[(w, idx)] = len(self.states)
                self._local_keys.append((w, idx))
                self.states.append(
                    (self._lift_weight(w), realization.basis_parity(w, idx))
                )
        self.roots = frozenset(
            (coord_map[p - 1], coord_map[q - 1]) for p, q in all_roots(m)
        )

    def _lift_weight(self, w: Weight) -> Weight:
        out = [0] * (2 * self.n)
        for loc, amb in enumerate(self.coord_map):
            out[amb - 1] = w[loc]
        return tuple(out)

    def unit_terms(self, unit: Unit, state: int):
        m = self.realization.datum.n
        local_unit = (self._to_local[unit[0]], self._to_local[unit[1]])
        w, idx = self._local_keys[state]
        matrix = self.realization.unit_matrix(local_unit, w)
        target = add_weights(w, root_weight(m, root_of(m, local_unit)))
        out = []
        for r in range(matrix.nrows):
            value = matrix[r, idx]
            if value:
                out.append((self._by_local[(target, r)], value))
        return out


class TensorLevi:
    """Outer tensor product of factors covering disjoint coordinate blocks."""

    def __init__(self, n: int, factors):
        self.n = n
        self.factors = list(factors)
        self.roots = (
            frozenset().union(*(f.roots for f in self.factors))
            if self.factors
            else frozenset()
        )
        self.hw = (
            tuple(sum(vals) for vals in zip(*(f.hw for f in self.factors)))
            if self.factors
            else (0,) * (2 * n)
        )
        self.states = []
        self._keys: list[tuple[int, ...]] = []
        key = [0] * len(self.factors)

        def build(i: int):
            if i == len(self.factors):
                weight = tuple(
                    sum(vals)
                    for vals in zip(
                        *(f.states[key[j]][0] for j, f in enumerate(self.factors))
                    )
                )
                parity = (
                    sum(f.states[key[j]][1] for j, f in enumerate(self.factors)) % 2
                )
                self._keys.append(tuple(key))
                self.states.append((weight, parity))
                return
            for s in range(len(self.factors[i].states)):
                key[i] = s
                build(i + 1)

        if self.factors:
            build(0)
        else:
            self.states = [((0,) * (2 * n), 0)]
            self._keys = [()]
        self._index = {k: i for i, k in enumerate(self._keys)}

    def unit_terms(self, unit: Unit, state: int):
        key = self._keys[state]
        owner = None
        for j, f in enumerate(self.factors):
            if root_of(self.n, unit) in f.roots:
                owner = j
                break
        if owner is None:
            return []
        sign = 1
        if unit_parity(self.n, unit) == 1:
            passed = sum(
                self.factors[j].states[key[j]][1] for j in range(owner)
            )
            if passed % 2 == 1:
                sign = -1
        out = []
        for s2, coef in self.factors[owner].unit_terms(unit, key[owner]):
            new_key = key[:owner] + (s2,) + key[owner + 1 :]
            out.append((self._index[new_key], sign * coef))
        return out


# ---------------------------------------------------------------------------
# The realization engine.


class Realization:
    """Truncated induced module on the PBW basis over an ordered complement.

    Basis vectors are pairs ``(exponents, levi_state)``: exponents align
    with ``datum.complement_order`` (odd-root exponents are 0 or 1), the
    levi state indexes the levi module's basis.  Construction enumerates all
    basis vectors of height-depth at most ``depth``; every weight with
    ``datum.depth_of(weight) <= depth`` then has a complete basis.

    After construction all queries are read-only.
    """

    def __init__(self, datum: InductionDatum, depth: int, levi=None):
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        self.datum = datum
        self.depth = depth
        self.levi = levi if levi is not None else TrivialLevi(datum.n, datum.hw)
        if self.levi.roots != datum.levi_roots:
            raise ValueError("levi module and datum disagree on levi roots")
        n = datum.n
        self._roots = [root_weight(n, r) for r in datum.complement_order]
        self._units: tuple[Unit, ...] = datum.complement_order
        self._odd = [is_odd_root(n, r) for r in datum.complement_order]
        self._costs = [datum.root_cost(r) for r in datum.complement_order]
        self._levi_offsets = []
        for weight, _parity in self.levi.states:
            off = datum.depth_of(weight)
            if off < 0:
                raise ValueError(
                    "levi state above the anchor weight: heights misaligned"
                )
            self._levi_offsets.append(off)
        self._act_memo: dict = {}
        self._matrix_cache: dict = {}
        self._weight_memo: dict = {}
        self.weight_spaces: dict[Weight, list] = {}
        self._enumerate()
        self._positions = {
            w: {bv: i for i, bv in enumerate(basis)}
            for w, basis in self.weight_spaces.items()
        }

    # -- construction -------------------------------------------------

    def _enumerate(self):
        k = len(self._roots)
        exps = [0] * k

        def emit(levi_state: int):
            bvec = (tuple(exps), levi_state)
            w = self.vector_weight(bvec)
            self.weight_spaces.setdefault(w, []).append(bvec)

        def walk(i: int, budget: int, levi_state: int):
            if i == k:
                emit(levi_state)
                return
            cost = self._costs[i]
            top = 1 if self._odd[i] else budget // cost
            for e in range(min(top, budget // cost) + 1):
                exps[i] = e
                walk(i + 1, budget - e * cost, levi_state)
            exps[i] = 0

        for state, off in enumerate(self._levi_offsets):
            walk(0, self.depth - off, state)
        for w in self.weight_spaces:
            self.weight_spaces[w].sort()

    # -- basic queries ------------------------------------------------

    def vector_weight(self, bvec) -> Weight:
        cached = self._weight_memo.get(bvec)
        if cached is not None:
            return cached
        exps, state = bvec
        w = list(self.levi.states[state][0])
        for e, rw in zip(exps, self._roots):
            if e:
                for t in range(len(w)):
                    w[t] += e * rw[t]
        out = tuple(w)
        self._weight_memo[bvec] = out
        return out

    def vector_parity(self, bvec) -> int:
        exps, state = bvec
        odd = sum(e for e, o in zip(exps, self._odd) if o)
        return (self.levi.states[state][1] + odd + self.datum.parity_shift) % 2

    def basis_parity(self, weight: Weight, idx: int) -> int:
        return self.vector_parity(self.weight_spaces[weight][idx])

    def in_region(self, weight: Weight) -> bool:
        return self.datum.depth_of(weight) <= self.depth

    def dimension(self, weight: Weight) -> int:
        return len(self.weight_spaces.get(weight, ()))

    def basis(self, weight: Weight) -> list:
        return list(self.weight_spaces.get(weight, ()))

    def vacuum(self):
        """The basis vector with no PBW factors over the first levi state."""
        return ((0,) * len(self._roots), 0)

    def monomial(self, unit_exponents: dict[Unit, int], levi_state: int = 0):
        """Basis vector with the given exponents keyed by complement unit."""
        exps = [0] * len(self._units)
        for unit, e in unit_exponents.items():
            try:
                i = self._units.index(unit)
            except ValueError:
                raise ValueError(f"{unit} is not a complement unit") from None
            if self._odd[i] and e not in (0, 1):
                raise ValueError(f"odd factor {unit} admits exponents 0 and 1 only")
            if e < 0:
                raise ValueError("negative exponent")
            exps[i] = e
        return (tuple(exps), levi_state)

    # -- straightening ------------------------------------------------

    def _unit_root_and_parity(self, unit: Unit):
        n = self.datum.n
        return root_of(n, unit), unit_parity(n, unit)

    def act_unit_on_basis(self, unit: Unit, bvec) -> dict:
        """Exact action of a matrix unit on a basis vector (no truncation)."""
        key = (unit, bvec)
        hit = self._act_memo.get(key)
        if hit is not None:
            return hit
        n = self.datum.n
        if is_cartan(unit):
            value = self.vector_weight(bvec)[unit[0] - 1]
            result = {bvec: Fraction(value)} if value else {}
            self._act_memo[key] = result
            return result
        exps, state = bvec
        first = next((i for i, e in enumerate(exps) if e), None)
        root = root_of(n, unit)
        position = None
        if root not in self.datum.inducing_roots:
            position = self._units.index(unit)
        if first is None or (position is not None and position <= first):
            # vacuum zone, or a complement unit that lands in PBW position
            if position is None:
                if root in self.datum.levi_roots:
                    result = {}
                    for s2, coef in self.levi.unit_terms(unit, state):
                        result[(exps, s2)] = (
                            result.get((exps, s2), Fraction(0)) + coef
                        )
                    result = {bv: c for bv, c in result.items() if c}
                else:
                    result = {}  # inducing non-levi root vector kills the vacuum
            else:
                if self._odd[position] and exps[position] == 1:
                    result = {}
                else:
                    new = list(exps)
                    new[position] += 1
                    result = {(tuple(new), state): Fraction(1)}
            self._act_memo[key] = result
            return result
        # commute the unit through the leading PBW power F^a
        p = first
        a = exps[p]
        f_unit = self._units[p]
        sign_gf = unit_parity(n, unit) * (1 if self._odd[p] else 0)
        rest = list(exps)
        rest[p] = 0
        rest_bvec = (tuple(rest), state)
        total: dict = {}

        def accumulate(vec: dict, scalar):
            if not scalar:
                return
            for bv, c in vec.items():
                val = total.get(bv, Fraction(0)) + scalar * c
                if val:
                    total[bv] = val
                else:
                    total.pop(bv, None)

        lead = self.act_unit_on_basis(unit, rest_bvec)
        lead = self._prepend_power(f_unit, a, lead)
        accumulate(lead, Fraction(-1 if (sign_gf * a) % 2 else 1))
        commutator = bracket(n, root_of(n, unit), root_of(n, f_unit))
        if commutator:
            for s in range(a):
                mid_exps = list(exps)
                mid_exps[p] = a - 1 - s
                mid_bvec = (tuple(mid_exps), state)
                inner: dict = {}
                for c_unit, c_coef in commutator:
                    part = self.act_unit_on_basis(c_unit, mid_bvec)
                    for bv, c in part.items():
                        val = inner.get(bv, Fraction(0)) + c_coef * c
                        if val:
                            inner[bv] = val
                        else:
                            inner.pop(bv, None)
                inner = self._prepend_power(f_unit, s, inner)
                accumulate(inner, Fraction(-1 if (sign_gf * s) % 2 else 1))
        self._act_memo[key] = total
        return total

    def _prepend_power(self, f_unit: Unit, power: int, vec: dict) -> dict:
        for _ in range(power):
            nxt: dict = {}
            for bv, c in vec.items():
                for bv2, c2 in self.act_unit_on_basis(f_unit, bv).items():
                    val = nxt.get(bv2, Fraction(0)) + c * c2
                    if val:
                        nxt[bv2] = val
                    else:
                        nxt.pop(bv2, None)
            vec = nxt
        return vec

    # -- public action ------------------------------------------------

    def _check_region(self, bvec):
        w = self.vector_weight(bvec)
        needed = self.datum.depth_of(w)
        if needed > self.depth:
            raise TruncationOverflow(w, needed, self.depth)

    def act_unit(self, unit: Unit, vec: dict) -> dict:
        """Action of a matrix unit on a module vector (dict of basis terms)."""
        out: dict = {}
        for bvec, coef in vec.items():
            if not coef:
                continue
            for bv, c in self.act_unit_on_basis(unit, bvec).items():
                self._check_region(bv)
                val = out.get(bv, Fraction(0)) + coef * c
                if val:
                    out[bv] = val
                else:
                    out.pop(bv, None)
        return out

    def act(self, element: Element, vec: dict) -> dict:
        out: dict = {}
        for unit, coef in element.terms.items():
            for bv, c in self.act_unit(unit, vec).items():
                val = out.get(bv, Fraction(0)) + coef * c
                if val:
                    out[bv] = val
                else:
                    out.pop(bv, None)
        return out

    def unit_matrix(self, unit: Unit, source: Weight) -> SparseRationalMatrix:
        """Matrix of the unit from the weight space at ``source`` to the one
        at ``source + root``; cached.  Shapes follow the canonical bases."""
        key = (unit, source)
        hit = self._matrix_cache.get(key)
        if hit is not None:
            return hit
        n = self.datum.n
        if not self.in_region(source):
            raise TruncationOverflow(source, self.datum.depth_of(source), self.depth)
        if is_cartan(unit):
            target = source
        else:
            target = add_weights(source, root_weight(n, root_of(n, unit)))
        if not self.in_region(target):
            raise TruncationOverflow(target, self.datum.depth_of(target), self.depth)
        cols = self.weight_spaces.get(source, [])
        rows = self._positions.get(target, {})
        entries: dict[tuple[int, int], Fraction] = {}
        for c, bvec in enumerate(cols):
            for bv, value in self.act_unit_on_basis(unit, bvec).items():
                entries[(rows[bv], c)] = value
        matrix = SparseRationalMatrix(len(rows), len(cols), entries)
        self._matrix_cache[key] = matrix
        return matrix

    # -- derived structure --------------------------------------------

    def singular_vectors(self, b: Label, mu: Weight):
        """Joint kernel of the raising actions of all b-simple roots at mu,
        split by parity: returns a list of (parity, vector dict)."""
        n = self.datum.n
        b = normalize_label(b, n)
        matrices = []
        for alpha in simple_roots(n, b):
            matrices.append(self.unit_matrix(alpha, mu))
        basis = self.weight_spaces.get(mu, [])
        out = []
        for parity in (0, 1):
            cols = [i for i, bv in enumerate(basis) if self.vector_parity(bv) == parity]
            if not cols:
                continue
            entries: dict[tuple[int, int], Fraction] = {}
            row_base = 0
            for m in matrices:
                for (r, c), v in m.entries.items():
                    if c in cols:
                        entries[(row_base + r, cols.index(c))] = v
                row_base += m.nrows
            stacked = SparseRationalMatrix(row_base, len(cols), entries)
            for kvec in kernel_basis(stacked):
                vec = {
                    basis[cols[i]]: v for i, v in enumerate(kvec) if v
                }
                out.append((parity, vec))
        return out

    def census(self) -> Character:
        table: dict[Weight, tuple[int, int]] = {}
        for w, basis in self.weight_spaces.items():
            even = sum(1 for bv in basis if self.vector_parity(bv) == 0)
            odd = len(basis) - even
            table[w] = (even, odd)
        return Character(
            self.datum.n, self.datum.hw, self.datum.heights, self.depth, table
        )

    def to_json(self, include_matrices: tuple[Unit, ...] = ()) -> str:
        doc = {
            "datum": self.datum.to_jsonable(),
            "depth": self.depth,
            "weights": [
                {
                    "weight": list(w),
                    "even": sum(
                        1 for bv in basis if self.vector_parity(bv) == 0
                    ),
                    "odd": sum(1 for bv in basis if self.vector_parity(bv) == 1),
                }
                for w, basis in sorted(self.weight_spaces.items())
            ],
        }
        if include_matrices:
            dumped = []
            for unit in include_matrices:
                for w in sorted(self.weight_spaces):
                    try:
                        m = self.unit_matrix(unit, w)
                    except TruncationOverflow:
                        continue
                    dumped.append(
                        {
                            "unit": list(unit),
                            "source": list(w),
                            "shape": [m.nrows, m.ncols],
                            "triplets": [
                                [r, c, str(v)]
                                for (r, c), v in sorted(m.entries.items())
                            ],
                        }
                    )
            doc["matrices"] = dumped
        return json.dumps(doc, sort_keys=True)


# ---------------------------------------------------------------------------
# Datum constructors.


def _ordered_complement(n: int, roots) -> tuple[Root, ...]:
    return tuple(sorted(roots))


def verma_datum(n: int, label: Label, t) -> InductionDatum:
    """Verma induction from a Borel: inducing roots are the positives."""
    label = normalize_label(label, n)
    pos = positive_roots(n, label)
    hw = from_tuple(n, t, label)
    complement = _ordered_complement(n, ((q, p) for p, q in pos))
    return InductionDatum(
        n=n,
        inducing_roots=pos,
        complement_order=complement,
        hw=hw,
        parity_shift=par(n, hw),
        heights=height_functional(n, label),
    )


def bg_datum(n: int, t) -> InductionDatum:
    """Enlarged-Borel induction: the outer-staircase Borel plus the lowering
    odd root of every matched diagonal pair."""
    base = b_outer(n)
    pos = set(positive_roots(n, base))
    for k in range(1, n + 1):
        if t[k - 1] == t[n + k - 1]:
            pos.add((n + k, k))
    hw = from_tuple(n, t, base)
    complement = _ordered_complement(n, (r for r in all_roots(n) if r not in pos))
    return InductionDatum(
        n=n,
        inducing_roots=frozenset(pos),
        complement_order=complement,
        hw=hw,
        parity_shift=par(n, hw),
        heights=height_functional(n, base),
    )


def union_borel_datum(n: int, labels, hw: Weight) -> InductionDatum:
    """One-dimensional induction from the span of several Borels' positives.

    Validation rejects the datum unless the union is bracket-closed and the
    weight kills the Cartan brackets of its opposite pairs.
    """
    pos: set[Root] = set()
    for label in labels:
        pos |= positive_roots(n, normalize_label(label, n))
    complement = _ordered_complement(n, (r for r in all_roots(n) if r not in pos))
    return InductionDatum(
        n=n,
        inducing_roots=frozenset(pos),
        complement_order=complement,
        hw=hw,
        parity_shift=par(n, hw),
        heights=height_functional(n, normalize_label(labels[0], n)),
    )


def bg_module_levi(n: int, specs) -> TensorLevi:
    """Tensor of diagonal gl(1|1) factors; specs = [(kind, a, b)] per k."""
    if len(specs) != n:
        raise ValueError(f"need {n} factor specs")
    factors = [
        Gl11Factor(n, k, kind, a, b) for k, (kind, a, b) in enumerate(specs, start=1)
    ]
    return TensorLevi(n, factors)


def bg_module_datum(n: int, levi: TensorLevi) -> InductionDatum:
    """Parabolic induction datum for the diagonal-Levi parabolic.

    The inducing set is the standard even positives, the odd roots positive
    for both staircases, and the diagonal levi roots; the truncation
    functional follows the hypercube Borel matching the factor lowering
    directions, so every factor's internal lowering has positive cost.
    """
    evens = {
        (block + i, block + j)
        for block in (0, n)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }
    levi_roots = frozenset((k, n + k) for k in range(1, n + 1)) | frozenset(
        (n + k, k) for k in range(1, n + 1)
    )
    inducing = evens | set(common_odd_roots(n)) | set(levi_roots)
    complement = _ordered_complement(n, (r for r in all_roots(n) if r not in inducing))
    gamma = tuple(
        1 if isinstance(f, Gl11Factor) and f.kind == "verma_delta" else 0
        for f in levi.factors
    )
    hw = levi.hw
    return InductionDatum(
        n=n,
        inducing_roots=frozenset(inducing),
        complement_order=complement,
        hw=hw,
        parity_shift=par(n, hw),
        heights=height_functional(n, hypercube_label(n, gamma)),
        levi_roots=levi_roots,
    )


def bg_module(n: int, specs, depth: int) -> Realization:
    """Induced module from the diagonal-Levi parabolic with factor specs."""
    levi = bg_module_levi(n, specs)
    return Realization(bg_module_datum(n, levi), depth, levi)


def bg_realization(n: int, t, depth: int) -> Realization:
    """The enlarged-Borel module of a tuple, as a one-dimensional induction."""
    return Realization(bg_datum(n, t), depth)


def verma_realization(n: int, label: Label, t, depth: int) -> Realization:
    return Realization(verma_datum(n, label, t), depth)


def parabolic_IJ_levi(
    n: int, label1: Label, label2: Label, t, depth: int
) -> TensorLevi:
    """Levi module M^{label1}(t_I) ⊠ M^{label2}(t_J) for the first-pair
    parabolic, with both factors realized to the ambient depth."""
    t_i = (t[0], t[n])
    t_j = t[1:n] + t[n + 1 :]
    factor1 = RealizationFactor(
        Realization(verma_datum(1, normalize_label(label1, 1), t_i), depth),
        n,
        (1, n + 1),
    )
    factor2 = RealizationFactor(
        Realization(verma_datum(n - 1, normalize_label(label2, n - 1), t_j), depth),
        n,
        tuple(range(2, n + 1)) + tuple(range(n + 2, 2 * n + 1)),
    )
    return TensorLevi(n, [factor1, factor2])


def parabolic_IJ_datum(n: int, label1: Label, label2: Label, levi: TensorLevi) -> InductionDatum:
    """Datum for the parabolic with Levi gl(1|1) x gl(n-1|n-1) on the first
    coordinate pair, truncated by the star-product Borel's functional."""
    i_coords = {1, n + 1}
    j_coords = {c for c in range(1, 2 * n + 1) if c not in i_coords}
    u_roots = {(p, q) for p in i_coords for q in j_coords}
    levi_roots = frozenset(
        (p, q)
        for p in range(1, 2 * n + 1)
        for q in range(1, 2 * n + 1)
        if p != q
        and (
            (p in i_coords and q in i_coords)
            or (p in j_coords and q in j_coords)
        )
    )
    inducing = frozenset(u_roots) | levi_roots
    complement = _ordered_complement(n, ((q, p) for p, q in u_roots))
    hw = levi.hw
    joined = star(1, normalize_label(label1, 1), n - 1, normalize_label(label2, n - 1))
    return InductionDatum(
        n=n,
        inducing_roots=inducing,
        complement_order=complement,
        hw=hw,
        parity_shift=0,
        heights=height_functional(n, joined),
        levi_roots=levi_roots,
    )


def parabolic_IJ_realization(
    n: int, label1: Label, label2: Label, t, depth: int
) -> Realization:
    levi = parabolic_IJ_levi(n, label1, label2, t, depth)
    return Realization(parabolic_IJ_datum(n, label1, label2, levi), depth, levi)


def gl11_simple_datum(a: int) -> InductionDatum:
    """The one-dimensional rank-1 module with matching tuple (a | a):
    everything induces, nothing lowers."""
    hw = from_tuple(1, (a, a), ())
    return InductionDatum(
        n=1,
        inducing_roots=frozenset({(1, 2), (2, 1)}),
        complement_order=(),
        hw=hw,
        parity_shift=par(1, hw),
        heights=height_functional(1, ()),
    )
