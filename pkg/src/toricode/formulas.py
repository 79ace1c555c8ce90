"""Closed-form minimum distances and dimensions for structured polytopes.

Covers: multiplicativity under products, the (q-1) factor for dilated
pyramids (and double pyramids under the length-2 segment hypothesis), the
recipe formula

    d = (q-1)^|J| * prod_{i in I} (q - 1 - a_i * prod_{j in J, j > i} k_j),

its corollary specializations (simplex, box, pyramid-over-cube, cross
polytope), the dilation decrease inequality, and parameter reports with the
relative-distance bound (1 - 1/(q-1))^|I|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .codes import build_code
from .gf import FieldSpec
from .mindist import DEFAULT_BUDGET, min_distance
from .polytopes import (
    ConstructionRecipe,
    LatticePolytope,
    PyramidScale,
    Segment,
    box,
    dilate,
    product,
    pyramid,
    realize_recipe,
)


@dataclass(frozen=True)
class CodeParams:
    """[N, k, d] plus the derived relative distance and rate."""

    N: int
    k: int
    d: int
    relative_distance: Fraction
    rate: Fraction
    exact: bool
    rel_distance_bound: Fraction | None = None


@dataclass(frozen=True)
class DecreaseCheck:
    ok: bool
    violation: tuple[int, int, Fraction, Fraction] | None

    def __bool__(self) -> bool:
        return self.ok


def d_product(d_p: int, d_q: int) -> int:
    """Minimum distance of the code of a product polytope."""
    if d_p < 1 or d_q < 1:
        raise ValueError("factor distances must be positive")
    return d_p * d_q


def d_pyramid_dilate(d_kq: int, q: int) -> int:
    """d for the k-dilated unit pyramid over Q, given d of the k-dilate of Q."""
    return (q - 1) * d_kq


def d_double_pyramid(d_kq: int, q: int, contains_length2_segment: bool) -> int:
    """Same (q-1) factor for the double pyramid; only proven when the base
    contains a lattice segment of lattice length 2 (caller-asserted)."""
    if not contains_length2_segment:
        raise ValueError(
            "the double-pyramid formula requires a lattice segment of length 2 in the base"
        )
    return (q - 1) * d_kq


def d_pyramid_upper_bound(d_q: int, k: int, q: int) -> int:
    """Upper bound (q - k) * d(C_Q) for the k-dilated pyramid over Q."""
    if not 1 <= k <= q - 1:
        raise ValueError(f"need 1 <= k <= q-1, got k={k}, q={q}")
    return (q - k) * d_q


def _pyramid_suffix_products(recipe: ConstructionRecipe) -> list[int]:
    """suffix[i] = product of pyramid factors at steps strictly after i."""
    n = recipe.n
    suffix = [1] * (n + 1)
    for i in range(n - 1, -1, -1):
        step = recipe.steps[i]
        f = step.factor if isinstance(step, PyramidScale) else 1
        suffix[i] = suffix[i + 1] * f
    return suffix


def d_recipe(recipe: ConstructionRecipe, q: int) -> int:
    """Exact minimum distance for a recipe-built polytope over GF(q).

    Every factor q - 1 - a_i * (suffix product of pyramid scales) must be
    positive; otherwise the recipe leaves the theory's hypotheses for this q
    and the call fails, naming the offending step.
    """
    if q < 3:
        raise ValueError(f"recipes need q >= 3, got q = {q}")
    suffix = _pyramid_suffix_products(recipe)
    d = 1
    pyramids = 0
    for i, step in enumerate(recipe.steps):
        if isinstance(step, PyramidScale):
            pyramids += 1
        else:
            factor = (q - 1) - step.length * suffix[i + 1]
            if factor <= 0:
                raise ValueError(
                    f"recipe invalid over GF({q}): step {i + 1} "
                    f"(segment {step.length}) yields nonpositive factor {factor}"
                )
            d *= factor
    return (q - 1) ** pyramids * d


def recipe_valid_for(recipe: ConstructionRecipe, q: int) -> bool:
    try:
        d_recipe(recipe, q)
        return True
    except ValueError:
        return False


def d_simplex(n: int, k: int, q: int) -> int:
    """d for the k-dilate of the standard n-simplex."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if q - 1 - k <= 0:
        raise ValueError(f"k-dilated simplex needs k <= q-2, got k={k}, q={q}")
    return (q - 1) ** (n - 1) * (q - 1 - k)


def d_box(sides, q: int) -> int:
    """d for the rectangular box prod [0, a_i]."""
    d = 1
    for i, a in enumerate(sides):
        factor = q - 1 - int(a)
        if factor <= 0:
            raise ValueError(f"box side a_{i + 1} = {a} needs a <= q-2 for q = {q}")
        d *= factor
    return d


def d_pyr_cube(l: int, m: int, k: int, q: int) -> int:
    """d for the k-dilate of the l-fold pyramid over the m-dimensional unit cube."""
    if l < 0 or m < 1 or k < 1:
        raise ValueError("need l >= 0, m >= 1, k >= 1")
    if q - 1 - k <= 0:
        raise ValueError(f"needs k <= q-2, got k={k}, q={q}")
    return (q - 1) ** l * (q - 1 - k) ** m


def d_cross(n: int, k: int, q: int) -> int:
    """d for the k-dilate of the translated n-dimensional cross polytope."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if q - 1 - 2 * k <= 0:
        raise ValueError(f"cross polytope needs 2k <= q-2, got k={k}, q={q}")
    return (q - 1) ** (n - 1) * (q - 1 - 2 * k)


def check_decrease(d_values, q: int, lam: int = 1) -> DecreaseCheck:
    """Verify d_k / d_{k-l} <= 1 - lam*l/(q-1) for all 0 <= l <= k.

    d_values[k] is the distance of the k-dilate code; lam is the lattice
    length of a segment contained in the base polytope (caller-supplied).
    Returns the first violating pair if any.
    """
    if lam < 1:
        raise ValueError("segment length must be >= 1")
    vals = [int(d) for d in d_values]
    for k in range(len(vals)):
        for l in range(k + 1):
            ratio = Fraction(vals[k], vals[k - l])
            bound = 1 - Fraction(lam * l, q - 1)
            if ratio > bound:
                return DecreaseCheck(False, (k, l, ratio, bound))
    return DecreaseCheck(True, None)


# ---------------------------------------------------------------------------
# dimension identities
# ---------------------------------------------------------------------------

def dim_product(dim_p: int, dim_q: int) -> int:
    return dim_p * dim_q


def dim_pyramid_dilate(dilate_dims) -> int:
    """dim of the k-dilated pyramid from the dims of the 0..k dilates of the base."""
    return sum(int(v) for v in dilate_dims)


def dim_recipe(recipe: ConstructionRecipe) -> int:
    """Dimension (lattice-point count) via the product/pyramid recursions."""
    dim = 1
    poly: LatticePolytope | None = None
    for step in recipe.steps:
        if isinstance(step, Segment):
            dim = dim_product(dim, step.length + 1)
            seg = box([step.length])
            poly = seg if poly is None else product(poly, seg)
        else:
            counts = [
                len(dilate(poly, l).lattice_points) for l in range(step.factor + 1)
            ]
            dim = dim_pyramid_dilate(counts)
            poly = dilate(pyramid(poly), step.factor)
    return dim


def dim_simplex_dilate(n: int, k: int) -> int:
    """Lattice points of the k-dilated standard n-simplex."""
    return comb(n + k, k)


# ---------------------------------------------------------------------------
# parameter reports
# ---------------------------------------------------------------------------

def recipe_distance_bound(recipe: ConstructionRecipe, q: int) -> Fraction:
    """Upper bound (1 - 1/(q-1))^|I| on the relative minimum distance."""
    segments = len(recipe.segment_positions())
    return (1 - Fraction(1, q - 1)) ** segments


def params_report(
    obj,
    field: FieldSpec,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
    threads: int | None = None,
    backend: str | None = None,
) -> CodeParams:
    """Assemble CodeParams for a recipe (formula d) or a polytope (search d)."""
    q = field.q
    if isinstance(obj, ConstructionRecipe):
        d = d_recipe(obj, q)
        k = dim_recipe(obj)
        n_block = (q - 1) ** obj.n
        rel = Fraction(d, n_block)
        bound = recipe_distance_bound(obj, q)
        if rel > bound:
            raise AssertionError(
                f"relative distance {rel} exceeds the structural bound {bound}"
            )
        return CodeParams(
            N=n_block,
            k=k,
            d=d,
            relative_distance=rel,
            rate=Fraction(k, n_block),
            exact=True,
            rel_distance_bound=bound,
        )
    if isinstance(obj, LatticePolytope):
        code = build_code(obj, field)
        result = min_distance(
            code, method=method, budget=budget, threads=threads, backend=backend
        )
        n_block = code.block_length
        return CodeParams(
            N=n_block,
            k=code.k,
            d=result.d,
            relative_distance=Fraction(result.d, n_block),
            rate=Fraction(code.k, n_block),
            exact=result.exact,
        )
    raise TypeError(f"expected a ConstructionRecipe or LatticePolytope, got {type(obj)!r}")


def verify_recipe(
    recipe: ConstructionRecipe,
    field: FieldSpec,
    budget: int = DEFAULT_BUDGET,
    threads: int | None = None,
    backend: str | None = None,
):
    """Formula vs search on the realized polytope. Returns (formula, search)."""
    formula = d_recipe(recipe, field.q)
    poly = realize_recipe(recipe)
    code = build_code(poly, field)
    result = min_distance(
        code, method="auto", budget=budget, threads=threads, backend=backend
    )
    return formula, result
