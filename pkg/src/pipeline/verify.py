"""
Executable checks of the Hall-algebra identities.

Each suite walks a parameter space (exhaustively where it is small, with a
seeded generator otherwise), evaluates both sides of an identity exactly and
returns a CheckReport listing every failing instance with its inputs.
"""

import functools
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.algebra.complexes import (
    BoundedComplex,
    acyclic_decompose,
    complex_direct_sum,
    euler_characteristic,
    hom_complex,
    homology_reps,
    make_K,
    make_stalk,
    reduce_to_normal_form,
    short_exact_complex,
)
from src.algebra.dhall import (
    DerivedHallAlgebra,
    DerivedWord,
    DHElement,
    iota,
    tensor_compose,
    tensor_decompose,
)
from src.algebra.homalg import (
    ComplexClass,
    complex_euler,
    dim_add,
    dim_sub,
    euler_fraction,
    ext1_class_dim,
    ext_count_with_middle,
    gamma,
    gamma_by_convolution,
    hall_number,
    hom_dim,
    injection_count,
    middle_terms,
    stalk_ext_dims,
)
from src.algebra.mhall import AlgebraElement, ModifiedHallAlgebra, NormalWord, TorusElement, word_class
from src.algebra.quiverrep import DimVector, IsoClassTable, subrep_enumerate
from src.algebra.rewriting import DERIVED, STALK, TORUS, Factor, derived_factor, stalk_factor, torus_factor
from src.utils.errors import BoundError, ContractError
from src.utils.models import CheckFailure, CheckReport

logger = logging.getLogger(__name__)

MODES = ("mh", "mh_tw", "dh", "dh_tw")
SUITES = (
    "green",
    "green_coefficients",
    "associativity",
    "confluence",
    "relations",
    "embed",
    "consistency",
    "euler",
    "reduction",
    "twist",
)


def fraction_text(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class _Collector:
    """Accumulates instances and failures of one suite"""

    def __init__(self):
        self.instances = 0
        self.failures: List[CheckFailure] = []

    def record(self, instance: Dict[str, Any], lhs, rhs, note: Optional[str] = None) -> None:
        self.instances += 1
        if lhs != rhs:
            lhs_text = fraction_text(lhs) if isinstance(lhs, (int, Fraction)) else repr(lhs)
            rhs_text = fraction_text(rhs) if isinstance(rhs, (int, Fraction)) else repr(rhs)
            self.failures.append(CheckFailure(instance=instance, lhs=lhs_text, rhs=rhs_text, note=note))

    def merge(self, other: "_Collector") -> None:
        self.instances += other.instances
        self.failures.extend(other.failures)


def _run_suite(check: str, parameter_space: str, body: Callable[[_Collector], None]) -> CheckReport:
    """Runs one suite with BEGIN/END logging and wall-time measurement"""
    logger.info("=== [%s] BEGIN ===", check)
    logger.debug("[%s] parameter space: %s", check, parameter_space)
    started = time.perf_counter()
    collector = _Collector()
    body(collector)
    report = CheckReport(
        check=check,
        parameter_space=parameter_space,
        instances=collector.instances,
        failures=collector.failures,
        wall_time=time.perf_counter() - started,
    )
    if report.passed:
        logger.info("=== [%s] END (ok) === %d instances in %.2fs", check, report.instances, report.wall_time)
    else:
        logger.warning(
            "=== [%s] END (FAILED) === %d of %d instances failed",
            check,
            len(report.failures),
            report.instances,
        )
    return report


_worker_table: Optional[IsoClassTable] = None


def _adopt_table(table: IsoClassTable) -> None:
    global _worker_table
    _worker_table = table


def _with_worker_table(task: Callable[[IsoClassTable, Any], _Collector], item) -> _Collector:
    return task(_worker_table, item)


def _parallel(
    table: IsoClassTable, task: Callable[[IsoClassTable, Any], _Collector], items: Sequence, workers: int
) -> Iterable[_Collector]:
    """Per-item collectors in input order.

    The counting is pure Python, so items are spread over worker processes;
    each worker receives the table once and keeps its own count memo.
    """
    if workers <= 1 or len(items) < 2:
        return (task(table, item) for item in items)
    chunksize = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers, initializer=_adopt_table, initargs=(table,)) as pool:
        return list(pool.map(functools.partial(_with_worker_table, task), items, chunksize=chunksize))


def _nonzero_ids(table: IsoClassTable, total_cap: Optional[int] = None) -> List[int]:
    return [c for c in table.ids() if c != table.zero_id and (total_cap is None or table.total_dim(c) <= total_cap)]


def _total_cap(table: IsoClassTable, dim_total_cap: Optional[int]) -> int:
    limit = sum(table.caps)
    if dim_total_cap is None:
        return limit
    if dim_total_cap < 0:
        raise BoundError(f"total dimension cap {dim_total_cap} is negative")
    if dim_total_cap > limit:
        raise BoundError(f"total dimension cap {dim_total_cap} exceeds what the table holds ({limit})")
    return dim_total_cap


def _fits(table: IsoClassTable, dims: Sequence[int], total_cap: int) -> bool:
    return table.within_caps(dims) and sum(dims) <= total_cap


# Green's formula


def green_sides(table: IsoClassTable, a: int, b: int, a2: int, b2: int) -> Tuple[Fraction, Fraction]:
    """Both sides of Green's formula for the classes A, B, A', B'"""
    q = table.q
    aut = table.aut_order
    lhs = Fraction(0)
    for c in table.ids_with_dim(dim_add(table.dim_vector(a), table.dim_vector(b))):
        lhs += Fraction(hall_number(table, a, b, c) * hall_number(table, a2, b2, c), aut(c))
    lhs *= aut(a) * aut(b) * aut(a2) * aut(b2)

    rhs = Fraction(0)
    dims_a, dims_b, dims_a2 = table.dim_vector(a), table.dim_vector(b), table.dim_vector(a2)
    for x in table.ids():
        dims_x = table.dim_vector(x)
        if any(u > v for u, v in zip(dims_x, dims_a)) or any(u > v for u, v in zip(dims_x, dims_a2)):
            continue
        for x2 in table.ids_with_dim(dim_sub(dims_a, dims_x)):
            g_a = hall_number(table, x, x2, a)
            if not g_a:
                continue
            for y in table.ids_with_dim(dim_sub(dims_a2, dims_x)):
                g_a2 = hall_number(table, x, y, a2)
                if not g_a2:
                    continue
                for y2 in table.ids_with_dim(dim_sub(dims_b, table.dim_vector(y))):
                    product = g_a * g_a2 * hall_number(table, y, y2, b) * hall_number(table, x2, y2, b2)
                    if not product:
                        continue
                    ext_over_hom = 1 / euler_fraction(table.quiver, q, dims_x, table.dim_vector(y2))
                    rhs += ext_over_hom * product * aut(x) * aut(y) * aut(x2) * aut(y2)
    return lhs, rhs


def _green_pair(classes: Tuple[int, ...], table: IsoClassTable, pair: Tuple[int, int]) -> _Collector:
    a, b = pair
    collector = _Collector()
    total = dim_add(table.dim_vector(a), table.dim_vector(b))
    for a2 in classes:
        for b2 in table.ids_with_dim(dim_sub(total, table.dim_vector(a2))):
            lhs, rhs = green_sides(table, a, b, a2, b2)
            collector.record({"A": a, "B": b, "A'": a2, "B'": b2}, lhs, rhs)
    return collector


def green_check(table: IsoClassTable, dim_total_cap: Optional[int] = None, workers: int = 1) -> CheckReport:
    cap = _total_cap(table, dim_total_cap)
    classes = tuple(_nonzero_ids(table, cap) + [table.zero_id])

    def body(collector: _Collector) -> None:
        pairs = [
            (a, b)
            for a, b in itertools.product(sorted(classes), repeat=2)
            if _fits(table, dim_add(table.dim_vector(a), table.dim_vector(b)), cap)
        ]
        for partial in _parallel(table, functools.partial(_green_pair, classes), pairs, workers):
            collector.merge(partial)

    return _run_suite("green", f"{table!r}, total dim <= {cap}", body)


def green_coefficient_sides(table: IsoClassTable, a: int, b: int, a2: int, n: int, b2: int) -> Tuple[Fraction, Fraction]:
    """Coefficients of K U_{N,n+1} U_{B',n} in both bracketings of U_{A,n} U_{B,n} U_{A',n+1}"""
    quiver, q = table.quiver, table.q
    dims = table.dim_vector
    lhs = Fraction(0)
    for c in table.ids_with_dim(dim_add(dims(a), dims(b))):
        g = hall_number(table, a, b, c)
        if g:
            lhs += g * gamma(table, a2, c, b2, n)
    lhs *= euler_fraction(quiver, q, dim_sub(dims(a2), dims(n)), dims(b2))

    rhs = Fraction(0)
    for y2 in table.ids():
        if any(u > v for u, v in zip(dims(y2), dims(b))):
            continue
        for x in table.ids_with_dim(dim_add(dim_sub(dims(a2), dims(b)), dims(y2))):
            first = gamma(table, a2, b, y2, x)
            if not first:
                continue
            for x2 in table.ids_with_dim(dim_sub(dims(b2), dims(y2))):
                second = gamma(table, x, a, x2, n)
                if not second:
                    continue
                g = hall_number(table, x2, y2, b2)
                if not g:
                    continue
                scalar = euler_fraction(quiver, q, dim_sub(dims(a), dims(x2)), dims(x2)) / euler_fraction(
                    quiver, q, dim_sub(dims(y2), dims(b)), dim_add(dims(y2), dims(x2))
                )
                rhs += first * second * g * scalar
    return lhs, rhs


def _green_coefficient_pair(classes: Tuple[int, ...], table: IsoClassTable, pair: Tuple[int, int]) -> _Collector:
    a, b = pair
    dims = table.dim_vector
    collector = _Collector()
    for a2 in classes:
        for n in table.ids():
            if any(u > v for u, v in zip(dims(n), dims(a2))):
                continue
            target = dim_add(dim_sub(dim_add(dims(a), dims(b)), dims(a2)), dims(n))
            for b2 in table.ids_with_dim(target):
                lhs, rhs = green_coefficient_sides(table, a, b, a2, n, b2)
                collector.record({"A": a, "B": b, "A'": a2, "N": n, "B'": b2}, lhs, rhs)
    return collector


def green_coefficient_check(table: IsoClassTable, dim_total_cap: Optional[int] = None, workers: int = 1) -> CheckReport:
    cap = _total_cap(table, dim_total_cap)
    classes = tuple(_nonzero_ids(table, cap) + [table.zero_id])
    dims = table.dim_vector

    def body(collector: _Collector) -> None:
        pairs = [
            (a, b)
            for a, b in itertools.product(sorted(classes), repeat=2)
            if _fits(table, dim_add(dims(a), dims(b)), cap)
        ]
        for partial in _parallel(table, functools.partial(_green_coefficient_pair, classes), pairs, workers):
            collector.merge(partial)

    return _run_suite("green_coefficients", f"{table!r}, total dim <= {cap}", body)


# Algebra suites


def _algebra(table: IsoClassTable, mode: str, strategy: str = "leftmost", max_steps: Optional[int] = None):
    if mode not in MODES:
        raise ContractError(f"unknown algebra mode {mode!r}, expected one of {MODES}")
    twisted = mode.endswith("_tw")
    if mode.startswith("dh"):
        return DerivedHallAlgebra(table, twisted=twisted, strategy=strategy, max_steps=max_steps)
    return ModifiedHallAlgebra(table, twisted=twisted, strategy=strategy, max_steps=max_steps)


def generator_pool(table: IsoClassTable, mode: str, degree_window: int = 2) -> List[Factor]:
    """Generators with degrees in [-window, window]: U and K for mh modes, Z for dh modes"""
    degrees = range(-degree_window, degree_window + 1)
    classes = _nonzero_ids(table)
    if mode.startswith("dh"):
        return [derived_factor(c, d) for d in degrees for c in classes]
    pool = [stalk_factor(c, d) for d in degrees for c in classes]
    vectors = [v for v in itertools.product(*(range(c + 1) for c in table.caps)) if any(v)]
    pool += [torus_factor(v, d) for d in degrees for v in vectors]
    return pool


def _stalk_dims(table: IsoClassTable, factors: Sequence[Factor]) -> DimVector:
    total = tuple(0 for _ in table.caps)
    for f in factors:
        if f.kind != TORUS:
            total = dim_add(total, table.dim_vector(f.label))
    return total


def sample_factors(
    table: IsoClassTable,
    pool: Sequence[Factor],
    rng: np.random.Generator,
    count: int,
    length: int,
    max_attempts: int = 100,
) -> List[Tuple[Factor, ...]]:
    """count tuples of generators whose stalk dimension vectors sum to within the caps"""
    samples: List[Tuple[Factor, ...]] = []
    for _ in range(count * max_attempts):
        if len(samples) == count:
            break
        picks = tuple(pool[int(i)] for i in rng.integers(0, len(pool), size=length))
        if table.within_caps(_stalk_dims(table, picks)):
            samples.append(picks)
    return samples


def associativity_suite(
    table: IsoClassTable,
    mode: str,
    samples: int = 200,
    seed: int = 0,
    degree_window: int = 2,
    max_steps: Optional[int] = None,
) -> CheckReport:
    algebra = _algebra(table, mode, max_steps=max_steps)
    pool = generator_pool(table, mode, degree_window)

    def body(collector: _Collector) -> None:
        rng = np.random.default_rng(seed)
        for triple in sample_factors(table, pool, rng, samples, 3):
            x, y, z = (algebra.normalize([f]) for f in triple)
            left = algebra.multiply(algebra.multiply(x, y), z)
            right = algebra.multiply(x, algebra.multiply(y, z))
            collector.record({"factors": [repr(f) for f in triple]}, left, right)

    return _run_suite(f"associativity[{mode}]", f"{samples} triples, degrees in [-{degree_window}, {degree_window}]", body)


def confluence_suite(
    table: IsoClassTable,
    mode: str,
    samples: int = 100,
    seed: int = 0,
    length: int = 4,
    degree_window: int = 2,
) -> CheckReport:
    leftmost = _algebra(table, mode, "leftmost")
    rightmost = _algebra(table, mode, "rightmost")
    pool = generator_pool(table, mode, degree_window)

    def body(collector: _Collector) -> None:
        rng = np.random.default_rng(seed)
        for word in sample_factors(table, pool, rng, samples, length):
            collector.record({"word": [repr(f) for f in word]}, leftmost.normalize(word), rightmost.normalize(word))

    return _run_suite(f"confluence[{mode}]", f"{samples} words of length {length}", body)


def _sum_words(algebra, expansion: Iterable[Tuple[Fraction, Sequence[Factor]]]):
    total = None
    for scalar, word in expansion:
        term = algebra.normalize(list(word)).scale(scalar)
        total = term if total is None else total + term
    return total if total is not None else algebra.normalize([]).scale(0)


def _adjacent_closed_form(table: IsoClassTable, mode: str, b: int, a: int, n: int) -> List[Tuple[Fraction, Tuple[Factor, ...]]]:
    """Right side of the adjacent-degree relation, with gamma from Hall-number convolution"""
    quiver, q = table.quiver, table.q
    dims, aut = table.dim_vector, table.aut_order
    terms = []
    for m in table.ids():
        if any(u > v for u, v in zip(dims(m), dims(b))):
            continue
        for cokernel in table.ids_with_dim(dim_add(dim_sub(dims(a), dims(b)), dims(m))):
            value = gamma_by_convolution(table, a, b, m, cokernel)
            if not value:
                continue
            count = value * aut(a) * aut(b) / (aut(m) * aut(cokernel))
            alpha = dim_sub(dims(b), dims(m))
            if mode == "mh":
                scalar = count * euler_fraction(quiver, q, alpha, dims(m))
                word = (torus_factor(alpha, n + 1), stalk_factor(cokernel, n + 1), stalk_factor(m, n))
            elif mode == "mh_tw":
                scalar = count / euler_fraction(quiver, q, dims(b), dims(a))
                word = (torus_factor(alpha, n + 1), stalk_factor(cokernel, n + 1), stalk_factor(m, n))
            elif mode == "dh":
                scalar = count / euler_fraction(quiver, q, dims(cokernel), dims(m))
                word = (derived_factor(cokernel, n + 1), derived_factor(m, n))
            else:
                scalar = count / euler_fraction(quiver, q, dims(b), dims(a))
                word = (derived_factor(cokernel, n + 1), derived_factor(m, n))
            terms.append((scalar, word))
    return terms


def _merge_closed_form(table: IsoClassTable, mode: str, a: int, b: int, n: int) -> List[Tuple[Fraction, Tuple[Factor, ...]]]:
    """Same-degree product from Hall numbers: |Ext^1(A,B)_C| / |Hom(A,B)| = g^C_{AB} a_A a_B / a_C"""
    make = derived_factor if mode.startswith("dh") else stalk_factor
    twist = Fraction(1)
    if mode.endswith("_tw"):
        twist = euler_fraction(table.quiver, table.q, table.dim_vector(a), table.dim_vector(b))
    terms = []
    for c in middle_terms(table, a, b):
        g = hall_number(table, a, b, c)
        if g:
            terms.append((twist * Fraction(g * table.aut_order(a) * table.aut_order(b), table.aut_order(c)), (make(c, n),)))
    return terms


def relations_suite(table: IsoClassTable, mode: str, degree_window: int = 1) -> CheckReport:
    """Defining relations on all in-cap generator pairs, the right sides built from Hall numbers"""
    algebra = _algebra(table, mode)
    quiver, q = table.quiver, table.q
    kind = DERIVED if mode.startswith("dh") else STALK
    make = derived_factor if kind == DERIVED else stalk_factor
    degrees = range(-degree_window, degree_window + 1)
    classes = _nonzero_ids(table)

    def body(collector: _Collector) -> None:
        for b, a in itertools.product(classes, repeat=2):
            if not table.within_caps(dim_add(table.dim_vector(a), table.dim_vector(b))):
                continue
            dims_b, dims_a = table.dim_vector(b), table.dim_vector(a)
            for n in degrees:
                lhs = algebra.normalize([make(a, n), make(b, n)])
                collector.record({"relation": "merge", "A": a, "B": b, "n": n}, lhs, _sum_words(algebra, _merge_closed_form(table, mode, a, b, n)))

                lhs = algebra.normalize([make(b, n), make(a, n + 1)])
                rhs = _sum_words(algebra, _adjacent_closed_form(table, mode, b, a, n))
                collector.record({"relation": "adjacent", "B": b, "A": a, "n": n}, lhs, rhs)

                m = n + 2
                pairing = euler_fraction(quiver, q, dims_b, dims_a) if mode.endswith("_tw") else euler_fraction(quiver, q, dims_a, dims_b)
                scalar = Fraction(1) if mode == "mh" else pairing ** ((-1) ** (m - n))
                lhs = algebra.normalize([make(b, n), make(a, m)])
                rhs = algebra.normalize([make(a, m), make(b, n)]).scale(scalar)
                collector.record({"relation": "far", "B": b, "A": a, "n": n, "m": m}, lhs, rhs)

        if kind == DERIVED:
            return
        vectors = [v for v in itertools.product(*(range(c + 1) for c in table.caps)) if any(v)]
        for alpha in vectors:
            for a in classes:
                dims_a = table.dim_vector(a)
                for n in degrees:
                    # K_{alpha,n} U_{A,m} against U_{A,m} K_{alpha,n}
                    for m in (n - 1, n, n + 1):
                        scalar = Fraction(1)
                        if mode == "mh" and m == n:
                            scalar = euler_fraction(quiver, q, dims_a, alpha)
                        elif mode == "mh" and m == n - 1:
                            scalar = 1 / euler_fraction(quiver, q, alpha, dims_a)
                        lhs = algebra.normalize([torus_factor(alpha, n), stalk_factor(a, m)])
                        rhs = algebra.normalize([stalk_factor(a, m), torus_factor(alpha, n)]).scale(scalar)
                        collector.record({"relation": "torus-stalk", "alpha": list(alpha), "n": n, "A": a, "m": m}, lhs, rhs)
        for alpha, beta in itertools.product(vectors, repeat=2):
            for n in degrees:
                scalar = Fraction(1) if mode == "mh_tw" else 1 / euler_fraction(quiver, q, alpha, beta)
                lhs = algebra.normalize([torus_factor(alpha, n), torus_factor(beta, n)])
                rhs = algebra.normalize([torus_factor(dim_add(alpha, beta), n)]).scale(scalar)
                collector.record({"relation": "torus-merge", "alpha": list(alpha), "beta": list(beta), "n": n}, lhs, rhs)

    return _run_suite(f"relations[{mode}]", f"{table!r}, degrees in [-{degree_window}, {degree_window}]", body)


# Embedding


def _random_derived_word(table: IsoClassTable, rng: np.random.Generator, degree_window: int) -> DerivedWord:
    classes = _nonzero_ids(table)
    degrees = [d for d in range(-degree_window, degree_window + 1) if rng.random() < 0.5]
    return DerivedWord.from_mapping({d: classes[int(rng.integers(0, len(classes)))] for d in degrees}, table.zero_id)


def _random_torus(table: IsoClassTable, rng: np.random.Generator, degree_window: int) -> TorusElement:
    exponents = {}
    for d in range(-degree_window, degree_window + 1):
        if rng.random() < 0.5:
            exponents[d] = tuple(int(rng.integers(-c, c + 1)) for c in table.caps)
    return TorusElement.from_mapping(exponents)


def embed_suite(table: IsoClassTable, degree_window: int = 2, samples: int = 100, seed: int = 0) -> CheckReport:
    derived = DerivedHallAlgebra(table, twisted=True)
    modified = ModifiedHallAlgebra(table, twisted=True)
    degrees = range(-degree_window, degree_window + 1)
    generators = [(c, d) for d in degrees for c in _nonzero_ids(table)]

    def body(collector: _Collector) -> None:
        for (b, n), (a, m) in itertools.product(generators, repeat=2):
            if not table.within_caps(dim_add(table.dim_vector(a), table.dim_vector(b))):
                continue
            zb, za = derived.generator(b, n), derived.generator(a, m)
            lhs = iota(table, derived.multiply(zb, za), modified)
            rhs = modified.multiply(iota(table, zb, modified), iota(table, za, modified))
            collector.record({"property": "homomorphism", "B": b, "n": n, "A": a, "m": m}, lhs, rhs)

        rng = np.random.default_rng(seed)
        leading: Dict[NormalWord, DerivedWord] = {}
        for _ in range(samples):
            word = _random_derived_word(table, rng, degree_window)
            image = iota(table, DHElement.basis(word), modified)
            head = image.leading_word()
            collector.record({"property": "single-word image", "word": repr(word)}, len(image), 1)
            seen = leading.setdefault(head, word)
            collector.record({"property": "injectivity", "word": repr(word)}, seen, word)

            torus = _random_torus(table, rng, degree_window)
            composed = tensor_compose(table, word, torus, modified)
            instance = {"word": repr(word), "torus": repr(torus)}
            if len(composed) != 1:
                collector.record({"property": "compose to one word", **instance}, len(composed), 1)
                continue
            ((normal, coefficient),) = composed.terms.items()
            collector.record({"property": "compose coefficient", **instance}, coefficient, Fraction(1))
            collector.record(
                {"property": "round trip", **instance},
                tensor_decompose(table, normal),
                (word, torus),
            )

    return _run_suite("embed", f"{table!r}, degrees in [-{degree_window}, {degree_window}], {samples} words", body)


# Counting oracles


def consistency_suite(table: IsoClassTable) -> CheckReport:
    classes = list(table.ids())
    dims, aut = table.dim_vector, table.aut_order

    def body(collector: _Collector) -> None:
        for a, b in itertools.product(classes, repeat=2):
            total = dim_add(dims(a), dims(b))
            if not table.within_caps(total):
                continue
            ext_total = 0
            for c in table.ids_with_dim(total):
                g = hall_number(table, a, b, c)
                collector.record(
                    {"oracle": "hall vs injections", "A": a, "B": b, "C": c},
                    Fraction(g),
                    Fraction(injection_count(table, b, c, a), aut(b)),
                )
                collector.record(
                    {"oracle": "gamma with zero cokernel", "D": a, "E": c, "F": b},
                    gamma(table, a, c, b, table.zero_id),
                    Fraction(g * aut(b), aut(c)),
                )
                ext_total += ext_count_with_middle(table, a, b, c)
            collector.record({"oracle": "ext sum", "A": a, "B": b}, ext_total, table.q ** ext1_class_dim(table, a, b))

        for a, b in itertools.product(classes, repeat=2):
            for m in classes:
                if any(u > v for u, v in zip(dims(m), dims(b))):
                    continue
                for n in table.ids_with_dim(dim_add(dim_sub(dims(a), dims(b)), dims(m))):
                    collector.record(
                        {"oracle": "gamma vs convolution", "A": a, "B": b, "M": m, "N": n},
                        gamma(table, a, b, m, n),
                        gamma_by_convolution(table, a, b, m, n),
                    )

    return _run_suite("consistency", repr(table), body)


def expected_hom_complex(table: IsoClassTable, left: Tuple[str, int, int], right: Tuple[str, int, int]) -> int:
    """Closed-form dimension of chain maps between stalk ("U") and two-term ("K") complexes"""
    (kind_x, a, m), (kind_y, b, n) = left, right
    hom = hom_dim(table, a, b)
    if kind_x == "U" and kind_y == "U":
        return hom if m == n else 0
    if kind_x == "K" and kind_y == "U":
        return hom if n == m - 1 else 0
    if kind_x == "U" and kind_y == "K":
        return hom if n == m else 0
    return hom if n in (m, m - 1) else 0


def euler_suite(table: IsoClassTable, degree_window: int = 2) -> CheckReport:
    classes = _nonzero_ids(table)
    degrees = range(-degree_window, degree_window + 1)
    quiver, q = table.quiver, table.q

    def build(kind: str, cid: int, degree: int) -> BoundedComplex:
        rep = table.representative(cid)
        return make_stalk(rep, degree) if kind == "U" else make_K(rep, degree)

    def body(collector: _Collector) -> None:
        for a, b in itertools.product(classes, repeat=2):
            for m, n in itertools.product(degrees, repeat=2):
                for kind_x, kind_y in itertools.product("UK", repeat=2):
                    left, right = (kind_x, a, m), (kind_y, b, n)
                    collector.record(
                        {"oracle": "hom_complex", "X": list(left), "Y": list(right)},
                        hom_complex(build(*left), build(*right)),
                        expected_hom_complex(table, left, right),
                    )
                alternating = Fraction(1)
                for p, dim in stalk_ext_dims(table, a, m, b, n).items():
                    alternating *= Fraction(q) ** ((-1) ** p * dim)
                pairing = complex_euler(
                    quiver, q, ComplexClass.stalk(table.dim_vector(a), m), ComplexClass.stalk(table.dim_vector(b), n)
                ).value
                collector.record({"oracle": "stalk euler form", "A": a, "m": m, "B": b, "n": n}, pairing, alternating)

    return _run_suite("euler", f"{table!r}, degrees in [-{degree_window}, {degree_window}]", body)


# Complexes


def random_acyclic_complex(table: IsoClassTable, rng: np.random.Generator, degree: int) -> BoundedComplex:
    """A short exact sequence sub -> C -> quotient in degrees m..m+2, sometimes plus a K complex"""
    classes = _nonzero_ids(table)
    C = table.representative(classes[int(rng.integers(0, len(classes)))])
    splits = list(subrep_enumerate(C))
    X = short_exact_complex(C, splits[int(rng.integers(0, len(splits)))], degree)
    if rng.random() < 0.5:
        extra = table.representative(classes[int(rng.integers(0, len(classes)))])
        X = complex_direct_sum(X, make_K(extra, degree + int(rng.integers(1, 3))))
    return X


def reduction_suite(table: IsoClassTable, samples: int = 50, seed: int = 0) -> CheckReport:
    algebras = {twisted: ModifiedHallAlgebra(table, twisted=twisted) for twisted in (False, True)}
    classes = _nonzero_ids(table)

    def body(collector: _Collector) -> None:
        rng = np.random.default_rng(seed)
        for trial in range(samples):
            X = random_acyclic_complex(table, rng, int(rng.integers(-2, 1)))
            reduced = reduce_to_normal_form(table, X)
            expected = NormalWord.from_parts(
                {degree: alpha for alpha, degree in acyclic_decompose(X)}, {}, table.zero_id
            )
            collector.record({"property": "acyclic decomposition", "trial": trial}, reduced.word, expected)

            components = {d: X.component(d).dim_vector for d in X.degrees()}
            homology = {d: H.dim_vector for d, H in homology_reps(X).items()}
            collector.record(
                {"property": "euler characteristic", "trial": trial},
                euler_characteristic(components),
                euler_characteristic(homology),
            )

            high = X.shift(3)
            low = make_stalk(table.representative(classes[int(rng.integers(0, len(classes)))]), int(rng.integers(-2, 1)) - 1)
            for twisted, algebra in algebras.items():
                whole = reduce_to_normal_form(table, complex_direct_sum(high, low), twisted)
                parts = [reduce_to_normal_form(table, Y, twisted) for Y in (high, low)]
                product = algebra.multiply(
                    AlgebraElement.basis(parts[0].word, parts[0].coefficient),
                    AlgebraElement.basis(parts[1].word, parts[1].coefficient),
                )
                collector.record(
                    {"property": "far direct sum", "trial": trial, "twisted": twisted},
                    AlgebraElement.basis(whole.word, whole.coefficient),
                    product,
                )

    return _run_suite("reduction", f"{samples} seeded acyclic complexes", body)


def twist_suite(table: IsoClassTable, samples: int = 100, seed: int = 0, degree_window: int = 2) -> CheckReport:
    """x * y = <|x|, |y|> x <> y, compared through the basis conversion"""
    diamond = ModifiedHallAlgebra(table, twisted=False)
    star = ModifiedHallAlgebra(table, twisted=True)
    pool = generator_pool(table, "mh", degree_window)

    def body(collector: _Collector) -> None:
        rng = np.random.default_rng(seed)
        for pair in sample_factors(table, pool, rng, samples, 2):
            x, y = (diamond.normalize([f]) for f in pair)
            (word_x,), (word_y,) = x.terms, y.terms
            scalar = complex_euler(table.quiver, table.q, word_class(table, word_x), word_class(table, word_y)).value
            lhs = star.multiply(diamond.retwist(x), diamond.retwist(y))
            rhs = diamond.retwist(diamond.multiply(x, y)).scale(scalar)
            collector.record({"factors": [repr(f) for f in pair]}, lhs, rhs)

    return _run_suite("twist", f"{samples} generator pairs", body)


def _given(value: Optional[int], default: int) -> int:
    return default if value is None else value


def run_suite(
    name: str,
    table: IsoClassTable,
    *,
    mode: Optional[str] = None,
    samples: Optional[int] = None,
    seed: int = 0,
    dim_total_cap: Optional[int] = None,
    degree_window: int = 2,
    workers: int = 1,
    max_steps: Optional[int] = None,
) -> List[CheckReport]:
    """Dispatch a suite by name; "all" runs every suite, algebra suites in every mode"""
    if name == "all":
        reports: List[CheckReport] = []
        for suite in SUITES:
            reports.extend(
                run_suite(
                    suite,
                    table,
                    mode=mode,
                    samples=samples,
                    seed=seed,
                    dim_total_cap=dim_total_cap,
                    degree_window=degree_window,
                    workers=workers,
                    max_steps=max_steps,
                )
            )
        return reports

    modes = [mode] if mode else list(MODES)
    if name == "green":
        return [green_check(table, dim_total_cap, workers)]
    if name == "green_coefficients":
        return [green_coefficient_check(table, dim_total_cap, workers)]
    if name == "associativity":
        return [associativity_suite(table, m, _given(samples, 200), seed, degree_window, max_steps) for m in modes]
    if name == "confluence":
        return [confluence_suite(table, m, _given(samples, 100), seed, degree_window=degree_window) for m in modes]
    if name == "relations":
        return [relations_suite(table, m, min(degree_window, 1)) for m in modes]
    if name == "embed":
        return [embed_suite(table, degree_window, _given(samples, 100), seed)]
    if name == "consistency":
        return [consistency_suite(table)]
    if name == "euler":
        return [euler_suite(table, degree_window)]
    if name == "reduction":
        return [reduction_suite(table, _given(samples, 50), seed)]
    if name == "twist":
        return [twist_suite(table, _given(samples, 100), seed, degree_window)]
    raise ContractError(f"unknown suite {name!r}, expected one of {SUITES + ('all',)}")
