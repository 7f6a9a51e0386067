"""
Finite-dimensional representations of an acyclic quiver over F_q.

Vertices are numbered 1..n. A representation stores one matrix per arrow,
of shape dim(target) x dim(source), acting on column vectors. Morphisms are
tuples of per-vertex matrices f_v with f_t M_a = N_a f_s for every arrow a.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.algebra import ffla
from src.algebra.ffla import PrimeField
from src.utils.errors import BoundError, ConsistencyError, ContractError, ResourceError
from src.utils.models import ResourceGuards

logger = logging.getLogger(__name__)

DimVector = Tuple[int, ...]
Morphism = Tuple[np.ndarray, ...]


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        if self.vertex_count < 1:
            raise ContractError("a quiver needs at least one vertex")
        for s, t in self.arrows:
            if not (1 <= s <= self.vertex_count and 1 <= t <= self.vertex_count):
                raise ContractError(f"arrow ({s}, {t}) uses a vertex outside 1..{self.vertex_count}")
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        indegree = {v: 0 for v in self.vertices}
        for _, t in self.arrows:
            indegree[t] += 1
        ready = [v for v in self.vertices if indegree[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for s, t in self.arrows:
                if s == v:
                    indegree[t] -= 1
                    if indegree[t] == 0:
                        ready.append(t)
        if seen != self.vertex_count:
            raise ContractError("quiver has an oriented cycle; only acyclic quivers are supported")

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def paths(self, source: int, target: int) -> List[Tuple[int, ...]]:
        """All paths source -> target as tuples of arrow indices, trivial path included"""
        found: List[Tuple[int, ...]] = []

        def walk(vertex: int, path: Tuple[int, ...]) -> None:
            if vertex == target:
                found.append(path)
            for index, (s, t) in enumerate(self.arrows):
                if s == vertex:
                    walk(t, path + (index,))

        walk(source, ())
        return found

    def zero_vector(self) -> DimVector:
        return (0,) * self.vertex_count

    def unit_vector(self, i: int) -> DimVector:
        return tuple(1 if v == i else 0 for v in self.vertices)


class Representation:
    """A representation of *quiver* over F_q"""

    __slots__ = ("quiver", "q", "dim_vector", "arrow_maps")

    def __init__(self, quiver: Quiver, q: int, dim_vector: Sequence[int], arrow_maps=None):
        dims = tuple(int(d) for d in dim_vector)
        if len(dims) != quiver.vertex_count:
            raise ContractError(f"dimension vector {dims} does not match {quiver.vertex_count} vertices")
        if any(d < 0 for d in dims):
            raise ContractError(f"dimension vector {dims} has a negative entry")
        if arrow_maps is not None and len(arrow_maps) != len(quiver.arrows):
            raise ContractError(f"expected {len(quiver.arrows)} arrow maps, got {len(arrow_maps)}")

        maps = []
        for index, (s, t) in enumerate(quiver.arrows):
            shape = (dims[t - 1], dims[s - 1])
            if arrow_maps is None:
                matrix = np.zeros(shape, dtype=np.int64)
            else:
                matrix = ffla.as_matrix(arrow_maps[index], q, shape)
            matrix.setflags(write=False)
            maps.append(matrix)

        self.quiver = quiver
        self.q = q
        self.dim_vector: DimVector = dims
        self.arrow_maps: Tuple[np.ndarray, ...] = tuple(maps)

    def dim(self, vertex: int) -> int:
        return self.dim_vector[vertex - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dim_vector)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def key(self) -> tuple:
        return (self.dim_vector, tuple(m.tobytes() for m in self.arrow_maps))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Representation)
            and self.quiver == other.quiver
            and self.q == other.q
            and self.key() == other.key()
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Representation(dim={self.dim_vector}, maps={[m.tolist() for m in self.arrow_maps]})"

    def map_lists(self) -> List[List[List[int]]]:
        return [m.tolist() for m in self.arrow_maps]

    def change_basis(self, bases: Sequence[np.ndarray]) -> "Representation":
        """Conjugate by invertible P_v: M_a -> P_t M_a P_s^-1"""
        maps = []
        for (s, t), matrix in zip(self.quiver.arrows, self.arrow_maps):
            p_t = bases[t - 1]
            p_s_inv = ffla.inverse(bases[s - 1], self.q)
            maps.append(ffla.matmul(ffla.matmul(p_t, matrix, self.q), p_s_inv, self.q))
        return Representation(self.quiver, self.q, self.dim_vector, maps)


def _check_compatible(M: Representation, N: Representation) -> None:
    if M.quiver != N.quiver or M.q != N.q:
        raise ContractError("representations live over different quivers or fields")


def simple_rep(quiver: Quiver, q: int, i: int) -> Representation:
    return Representation(quiver, q, quiver.unit_vector(i))


def zero_rep(quiver: Quiver, q: int) -> Representation:
    return Representation(quiver, q, quiver.zero_vector())


def projective_rep(quiver: Quiver, q: int, i: int) -> Representation:
    """P_i: paths starting at i, arrows act by post-composition"""
    bases = {v: quiver.paths(i, v) for v in quiver.vertices}
    maps = []
    for index, (s, t) in enumerate(quiver.arrows):
        matrix = np.zeros((len(bases[t]), len(bases[s])), dtype=np.int64)
        for col, path in enumerate(bases[s]):
            matrix[bases[t].index(path + (index,)), col] = 1
        maps.append(matrix)
    return Representation(quiver, q, [len(bases[v]) for v in quiver.vertices], maps)


def injective_rep(quiver: Quiver, q: int, i: int) -> Representation:
    """I_i: dual of paths ending at i"""
    bases = {v: quiver.paths(v, i) for v in quiver.vertices}
    maps = []
    for index, (s, t) in enumerate(quiver.arrows):
        matrix = np.zeros((len(bases[t]), len(bases[s])), dtype=np.int64)
        for row, path in enumerate(bases[t]):
            matrix[row, bases[s].index((index,) + path)] = 1
        maps.append(matrix)
    return Representation(quiver, q, [len(bases[v]) for v in quiver.vertices], maps)


def direct_sum(M: Representation, N: Representation) -> Representation:
    _check_compatible(M, N)
    maps = []
    for (s, t), a, b in zip(M.quiver.arrows, M.arrow_maps, N.arrow_maps):
        block = np.zeros((M.dim(t) + N.dim(t), M.dim(s) + N.dim(s)), dtype=np.int64)
        block[: M.dim(t), : M.dim(s)] = a
        block[M.dim(t):, M.dim(s):] = b
        maps.append(block)
    dims = [m + n for m, n in zip(M.dim_vector, N.dim_vector)]
    return Representation(M.quiver, M.q, dims, maps)


def is_morphism(M: Representation, N: Representation, f: Morphism) -> bool:
    for v in M.quiver.vertices:
        if f[v - 1].shape != (N.dim(v), M.dim(v)):
            return False
    return not _intertwining_residual(M, N, f).any()


def _intertwining_residual(M: Representation, N: Representation, f: Morphism) -> np.ndarray:
    q = M.q
    parts = [
        (ffla.matmul(f[t - 1], m_a, q) - ffla.matmul(n_a, f[s - 1], q)).reshape(-1) % q
        for (s, t), m_a, n_a in zip(M.quiver.arrows, M.arrow_maps, N.arrow_maps)
    ]
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(parts)


def _unflatten(vector: np.ndarray, shapes: Sequence[Tuple[int, int]]) -> Morphism:
    blocks = []
    offset = 0
    for rows, cols in shapes:
        size = rows * cols
        block = np.asarray(vector[offset: offset + size], dtype=np.int64).reshape(rows, cols)
        blocks.append(block)
        offset += size
    return tuple(blocks)


@dataclass(frozen=True)
class HomSpace:
    source: Representation
    target: Representation
    basis: Tuple[Morphism, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.source.q ** self.dim

    def element(self, coefficients: Sequence[int]) -> Morphism:
        q = self.source.q
        shapes = [(self.target.dim(v), self.source.dim(v)) for v in self.source.quiver.vertices]
        blocks = [np.zeros(shape, dtype=np.int64) for shape in shapes]
        for c, morphism in zip(coefficients, self.basis):
            if c:
                for v, part in enumerate(morphism):
                    blocks[v] = (blocks[v] + c * part) % q
        return tuple(blocks)

    def elements(self, cap: Optional[int] = None) -> Iterator[Morphism]:
        """Every morphism, in lexicographic coefficient order"""
        if cap is not None and self.size > cap:
            raise ResourceError(f"Hom space has {self.size} elements, above the cap of {cap}")
        for coefficients in itertools.product(range(self.source.q), repeat=self.dim):
            yield self.element(coefficients)


def hom_basis(M: Representation, N: Representation) -> HomSpace:
    """Basis of Hom(M, N) as the kernel of the intertwining equations"""
    _check_compatible(M, N)
    shapes = [(N.dim(v), M.dim(v)) for v in M.quiver.vertices]
    unknowns = sum(r * c for r, c in shapes)
    if unknowns == 0:
        return HomSpace(M, N, ())

    columns = []
    for k in range(unknowns):
        unit = np.zeros(unknowns, dtype=np.int64)
        unit[k] = 1
        columns.append(_intertwining_residual(M, N, _unflatten(unit, shapes)))
    system = np.stack(columns, axis=1)
    kernel = ffla.nullspace(system, M.q)
    return HomSpace(M, N, tuple(_unflatten(row, shapes) for row in kernel))


def is_iso_morphism(f: Morphism, q: int) -> bool:
    return all(ffla.is_invertible(block, q) for block in f)


def aut_order(M: Representation, cap: Optional[int] = None) -> int:
    """Brute-force |Aut(M)| by scanning End(M)"""
    if M.is_zero():
        return 1
    return sum(1 for f in hom_basis(M, M).elements(cap) if is_iso_morphism(f, M.q))


def fingerprint(M: Representation) -> tuple:
    """Isomorphism invariant: dim vector, dim End, dims of Hom to and from each simple"""
    simples = [simple_rep(M.quiver, M.q, i) for i in M.quiver.vertices]
    return (
        M.dim_vector,
        hom_basis(M, M).dim,
        tuple(hom_basis(M, S).dim for S in simples),
        tuple(hom_basis(S, M).dim for S in simples),
    )


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    probabilistic: bool = False
    witness: Optional[Morphism] = None


def find_isomorphism(
    M: Representation,
    N: Representation,
    search_cap: int = 1_000_000,
    samples: int = 4096,
    seed: int = 0,
) -> IsoResult:
    """Search Hom(M, N) for an invertible element.

    Exhaustive while q^dim Hom <= *search_cap*; above the cap a seeded
    random sample is drawn and the answer is flagged probabilistic.
    """
    _check_compatible(M, N)
    if M.dim_vector != N.dim_vector:
        return IsoResult(False)
    space = hom_basis(M, N)
    if space.dim == 0:
        return IsoResult(M.is_zero())

    if space.size <= search_cap:
        for f in space.elements():
            if is_iso_morphism(f, M.q):
                return IsoResult(True, witness=f)
        return IsoResult(False)

    logger.info("Hom space of size %d above search cap, sampling %d elements", space.size, samples)
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        f = space.element(rng.integers(0, M.q, size=space.dim).tolist())
        if is_iso_morphism(f, M.q):
            return IsoResult(True, probabilistic=True, witness=f)
    return IsoResult(False, probabilistic=True)


def is_isomorphic(M: Representation, N: Representation, search_cap: int = 1_000_000, seed: int = 0) -> bool:
    _check_compatible(M, N)
    if M.dim_vector != N.dim_vector:
        return False
    if fingerprint(M) != fingerprint(N):
        return False
    return find_isomorphism(M, N, search_cap=search_cap, seed=seed).isomorphic


@dataclass(frozen=True)
class Subrepresentation:
    """An arrow-invariant subspace tuple with its sub- and quotient representation"""

    subspaces: Tuple[np.ndarray, ...]
    sub: Representation
    quotient: Representation


def split_by_subspaces(C: Representation, subspaces: Sequence[np.ndarray]) -> Optional[Subrepresentation]:
    """Sub and quotient for the given per-vertex subspaces, None if not arrow-invariant.

    Each subspace basis is completed to a full basis; the arrow maps written
    in those bases are block upper triangular exactly when the subspaces are
    invariant.
    """
    q = C.q
    full = [ffla.complete_basis(subspaces[v - 1], C.dim(v), q) for v in C.quiver.vertices]
    sub_dims = [subspaces[v - 1].shape[0] for v in C.quiver.vertices]
    sub_maps, quotient_maps = [], []
    for (s, t), matrix in zip(C.quiver.arrows, C.arrow_maps):
        d_s, d_t = sub_dims[s - 1], sub_dims[t - 1]
        changed = ffla.matmul(
            ffla.inverse(full[t - 1].T, q),
            ffla.matmul(matrix, full[s - 1].T, q),
            q,
        )
        if changed[d_t:, :d_s].any():
            return None
        sub_maps.append(changed[:d_t, :d_s])
        quotient_maps.append(changed[d_t:, d_s:])
    quotient_dims = [c - d for c, d in zip(C.dim_vector, sub_dims)]
    return Subrepresentation(
        subspaces=tuple(subspaces),
        sub=Representation(C.quiver, q, sub_dims, sub_maps),
        quotient=Representation(C.quiver, q, quotient_dims, quotient_maps),
    )


def subrep_enumerate(C: Representation, dim_vector: Optional[Sequence[int]] = None) -> Iterator[Subrepresentation]:
    """Every subrepresentation of C exactly once, optionally of a fixed dimension vector"""
    if dim_vector is None:
        choices = [range(C.dim(v) + 1) for v in C.quiver.vertices]
    else:
        choices = [[d] for d in dim_vector]
    for dims in itertools.product(*choices):
        spaces = [list(ffla.subspace_enumerate(C.dim(v), d, C.q)) for v, d in zip(C.quiver.vertices, dims)]
        for subspaces in itertools.product(*spaces):
            split = split_by_subspaces(C, subspaces)
            if split is not None:
                yield split


def _as_rows(matrix: np.ndarray, width: int) -> np.ndarray:
    if width == 0:
        return np.zeros((0, 0), dtype=np.int64)
    return matrix.reshape(-1, width)


def kernel(M: Representation, N: Representation, f: Morphism) -> Subrepresentation:
    """Ker f as a subrepresentation of M"""
    spaces = [ffla.row_space(_as_rows(ffla.nullspace(f[v - 1], M.q), M.dim(v)), M.q) for v in M.quiver.vertices]
    split = split_by_subspaces(M, spaces)
    if split is None:
        raise ContractError("kernel is not arrow-invariant; the map is not a morphism")
    return split


def image(M: Representation, N: Representation, f: Morphism) -> Subrepresentation:
    """Im f as a subrepresentation of N, so .quotient is the cokernel"""
    spaces = [_as_rows(ffla.column_space(f[v - 1], N.q), N.dim(v)) for v in N.quiver.vertices]
    split = split_by_subspaces(N, spaces)
    if split is None:
        raise ContractError("image is not arrow-invariant; the map is not a morphism")
    return split


@dataclass(frozen=True)
class IsoClassInfo:
    id: int
    dim_vector: DimVector
    end_dim: int
    aut_order: int
    fingerprint: tuple
    decomposition: Tuple[int, ...]
    probabilistic: bool = False

    @property
    def is_indecomposable(self) -> bool:
        return len(self.decomposition) == 1


def _dim_order(dim_vector: DimVector) -> tuple:
    return (sum(dim_vector), tuple(-d for d in dim_vector))


class IsoClassTable:
    """Iso classes of representations with dimension vector bounded by *caps*.

    Ids are assigned in enumeration order, so the zero object is id 0.
    Built once, then read-only.
    """

    def __init__(
        self,
        quiver: Quiver,
        q: int,
        caps: Sequence[int],
        representatives: Sequence[Representation],
        aut_orders: Sequence[int],
        decompositions: Optional[Sequence[Sequence[int]]] = None,
        probabilistic: Optional[Sequence[bool]] = None,
        guards: Optional[ResourceGuards] = None,
        seed: int = 0,
    ):
        self.quiver = quiver
        self.q = q
        self.caps: DimVector = tuple(caps)
        self.guards = guards or ResourceGuards()
        self.seed = seed
        # homalg counts keyed by (function, class ids)
        self.memo: Dict[tuple, object] = {}
        self._reps = tuple(representatives)
        fingerprints = [fingerprint(rep) for rep in self._reps]

        self._index: Dict[tuple, List[int]] = defaultdict(list)
        self._by_dim: Dict[DimVector, List[int]] = defaultdict(list)
        for cid, (rep, fp) in enumerate(zip(self._reps, fingerprints)):
            self._index[fp].append(cid)
            self._by_dim[rep.dim_vector].append(cid)

        if decompositions is None:
            decompositions = self._decompose()
        flags = probabilistic or [False] * len(self._reps)
        self._infos = tuple(
            IsoClassInfo(
                id=cid,
                dim_vector=rep.dim_vector,
                end_dim=fp[1],
                aut_order=int(aut),
                fingerprint=fp,
                decomposition=tuple(decomp),
                probabilistic=bool(flag),
            )
            for cid, (rep, fp, aut, decomp, flag) in enumerate(
                zip(self._reps, fingerprints, aut_orders, decompositions, flags)
            )
        )
        self._by_decomposition = {info.decomposition: info.id for info in self._infos}
        self._aliases = self._assign_aliases()
        self._alias_lookup = {alias: cid for cid, alias in self._aliases.items()}

    def __len__(self) -> int:
        return len(self._reps)

    def __repr__(self) -> str:
        return f"IsoClassTable(arrows={self.quiver.arrows}, q={self.q}, caps={self.caps}, classes={len(self)})"

    @property
    def zero_id(self) -> int:
        return 0

    def ids(self) -> range:
        return range(len(self._reps))

    def representative(self, cid: int) -> Representation:
        return self._reps[cid]

    def info(self, cid: int) -> IsoClassInfo:
        return self._infos[cid]

    def dim_vector(self, cid: int) -> DimVector:
        return self._infos[cid].dim_vector

    def aut_order(self, cid: int) -> int:
        return self._infos[cid].aut_order

    def end_order(self, cid: int) -> int:
        return self.q ** self._infos[cid].end_dim

    def total_dim(self, cid: int) -> int:
        return sum(self._infos[cid].dim_vector)

    def within_caps(self, dim_vector: Sequence[int]) -> bool:
        return len(dim_vector) == len(self.caps) and all(0 <= d <= c for d, c in zip(dim_vector, self.caps))

    def ids_with_dim(self, dim_vector: Sequence[int]) -> Tuple[int, ...]:
        dim_vector = tuple(dim_vector)
        if not self.within_caps(dim_vector):
            return ()
        return tuple(self._by_dim.get(dim_vector, ()))

    def canonical_id(self, M: Representation) -> int:
        if M.quiver != self.quiver or M.q != self.q:
            raise ContractError("representation does not belong to this table's quiver and field")
        if not self.within_caps(M.dim_vector):
            raise BoundError(f"dimension vector {M.dim_vector} exceeds table caps {self.caps}")
        candidates = self._index.get(fingerprint(M), [])
        # the table is complete, so a unique candidate is the class
        if len(candidates) == 1:
            return candidates[0]
        for cid in candidates:
            result = find_isomorphism(
                M, self._reps[cid], self.guards.iso_search_cap, self.guards.iso_samples, self.seed
            )
            if result.isomorphic:
                return cid
        raise ConsistencyError(f"no iso class matches {M!r}; table is incomplete")

    def _decompose(self) -> List[Tuple[int, ...]]:
        """Krull-Schmidt decomposition of every class by building direct sums bottom-up"""
        decompositions: Dict[int, Tuple[int, ...]] = {0: ()}
        sums: Dict[int, Tuple[int, ...]] = {}
        processed: List[int] = []
        for cid in range(1, len(self._reps)):
            decompositions[cid] = sums.get(cid, (cid,))
            processed.append(cid)
            for other in processed:
                dims = tuple(a + b for a, b in zip(self._reps[cid].dim_vector, self._reps[other].dim_vector))
                if not self.within_caps(dims):
                    continue
                target = self.canonical_id(direct_sum(self._reps[cid], self._reps[other]))
                parts = tuple(sorted(decompositions[cid] + decompositions[other]))
                if sums.setdefault(target, parts) != parts:
                    raise ConsistencyError(f"class {target} has two distinct decompositions")
        return [decompositions[cid] for cid in range(len(self._reps))]

    def _special_id(self, M: Representation) -> Optional[int]:
        if not self.within_caps(M.dim_vector):
            return None
        return self.canonical_id(M)

    def _assign_aliases(self) -> Dict[int, str]:
        n = self.quiver.vertex_count
        names: Dict[int, str] = {0: "0"}
        for i in self.quiver.vertices:
            cid = self._special_id(simple_rep(self.quiver, self.q, i))
            if cid is not None:
                names[cid] = "S" if n == 1 else f"S{i}"

        sources = {s for s, _ in self.quiver.arrows}
        for i in self.quiver.vertices:
            cid = self._special_id(projective_rep(self.quiver, self.q, i))
            if cid is not None and cid not in names:
                names[cid] = "P" if len(sources) == 1 else f"P{i}"
        for i in self.quiver.vertices:
            cid = self._special_id(injective_rep(self.quiver, self.q, i))
            if cid is not None and cid not in names:
                names[cid] = f"I{i}"

        for info in self._infos:
            if info.is_indecomposable and info.id not in names:
                names[info.id] = f"X{info.id}"
        for info in self._infos:
            if info.id not in names:
                names[info.id] = "+".join(names[part] for part in info.decomposition)
        return names

    def alias(self, cid: int) -> str:
        return self._aliases[cid]

    def aliases(self) -> Dict[int, str]:
        return dict(self._aliases)

    def resolve(self, name) -> int:
        """Class id from an alias ("S1", "P", "S1+S2", "S⊕S") or a numeric id"""
        if isinstance(name, int):
            if not 0 <= name < len(self):
                raise ContractError(f"class id {name} out of range 0..{len(self) - 1}")
            return name
        text = str(name).strip().replace("⊕", "+").replace("_", "").replace(" ", "")
        if text.isdigit():
            return self.resolve(int(text))
        if text in self._alias_lookup:
            return self._alias_lookup[text]
        if "+" in text:
            parts: Tuple[int, ...] = ()
            for part in text.split("+"):
                parts += self._infos[self.resolve(part)].decomposition
            cid = self._by_decomposition.get(tuple(sorted(parts)))
            if cid is not None:
                return cid
            raise BoundError(f"{name!r} is not within the table caps {self.caps}")
        raise ContractError(f"unknown iso class {name!r}")


def canonical_id(table: IsoClassTable, M: Representation) -> int:
    return table.canonical_id(M)


def _map_entries(quiver: Quiver, dim_vector: DimVector) -> int:
    return sum(dim_vector[t - 1] * dim_vector[s - 1] for s, t in quiver.arrows)


def gl_product(dim_vector: Sequence[int], q: int) -> int:
    """|GL_d| = prod_v |GL_{d_v}(F_q)|"""
    group = 1
    for d in dim_vector:
        group *= ffla.gl_order(d, q)
    return group


def orbit_count_defects(
    quiver: Quiver, q: int, caps: Sequence[int], dim_vectors: Sequence[DimVector], aut_orders: Sequence[int]
) -> List[str]:
    """Ways in which (dim vector, a_M) pairs fail to be a full classification under *caps*.

    Orbits partition each representation space, so the classes of dimension d
    must satisfy sum_M |GL_d| / a_M = q^(sum over arrows of d_s d_t).
    """
    defects: List[str] = []
    dim_vectors = [tuple(dv) for dv in dim_vectors]
    if not dim_vectors or any(dim_vectors[0]):
        defects.append("class 0 is not the zero representation")
    orders = [_dim_order(dv) for dv in dim_vectors]
    if orders != sorted(orders):
        defects.append("classes are not in enumeration order")

    mass: Dict[DimVector, int] = defaultdict(int)
    for cid, (dv, aut) in enumerate(zip(dim_vectors, aut_orders)):
        if len(dv) != len(caps) or any(not 0 <= d <= c for d, c in zip(dv, caps)):
            defects.append(f"class {cid} has dimension vector {dv} outside the caps {tuple(caps)}")
            continue
        group = gl_product(dv, q)
        if aut <= 0 or group % aut:
            defects.append(f"class {cid} has aut order {aut}, which does not divide |GL| = {group}")
            continue
        mass[dv] += group // aut

    for dv in itertools.product(*(range(c + 1) for c in caps)):
        points = q ** _map_entries(quiver, dv)
        if mass[dv] != points:
            defects.append(f"orbits of dimension {dv} cover {mass[dv]} of {points} points")
    return defects


def _arrow_map_tuples(quiver: Quiver, q: int, dim_vector: DimVector) -> Iterator[List[np.ndarray]]:
    shapes = [(dim_vector[t - 1], dim_vector[s - 1]) for s, t in quiver.arrows]
    total = sum(r * c for r, c in shapes)
    for entries in itertools.product(range(q), repeat=total):
        yield list(_unflatten(np.array(entries, dtype=np.int64), shapes))


def enumerate_reps(
    quiver: Quiver,
    q: int,
    caps: Sequence[int],
    guards: Optional[ResourceGuards] = None,
    seed: int = 0,
) -> IsoClassTable:
    """Classify all representations with dim vector <= caps up to isomorphism.

    Every point of each representation space is visited once; the number of
    points landing in a class is its orbit size, which gives
    a_M = prod_v |GL_{d_v}(F_q)| / |orbit|.
    """
    PrimeField(q)
    guards = guards or ResourceGuards()
    caps = tuple(int(c) for c in caps)
    if len(caps) != quiver.vertex_count or any(c < 0 for c in caps):
        raise ContractError(f"caps {caps} must be {quiver.vertex_count} non-negative integers")

    dim_vectors = sorted(itertools.product(*(range(c + 1) for c in caps)), key=_dim_order)
    points = sum(q ** _map_entries(quiver, dv) for dv in dim_vectors)
    if points > guards.max_matrices:
        raise ResourceError(f"enumeration needs {points} arrow-map tuples, above the cap of {guards.max_matrices}")
    logger.info("Enumerating %d representations (arrows=%s, q=%d, caps=%s)", points, quiver.arrows, q, caps)

    reps: List[Representation] = []
    orbit_sizes: List[int] = []
    probabilistic: List[bool] = []
    index: Dict[tuple, List[int]] = defaultdict(list)

    for dv in dim_vectors:
        for maps in _arrow_map_tuples(quiver, q, dv):
            M = Representation(quiver, q, dv, maps)
            fp = fingerprint(M)
            match = None
            for cid in index[fp]:
                result = find_isomorphism(M, reps[cid], guards.iso_search_cap, guards.iso_samples, seed)
                probabilistic[cid] = probabilistic[cid] or result.probabilistic
                if result.isomorphic:
                    match = cid
                    break
            if match is None:
                index[fp].append(len(reps))
                reps.append(M)
                orbit_sizes.append(1)
                probabilistic.append(False)
            else:
                orbit_sizes[match] += 1

    aut_orders = []
    for rep, orbit in zip(reps, orbit_sizes):
        group = gl_product(rep.dim_vector, q)
        if group % orbit:
            raise ConsistencyError(f"orbit size {orbit} does not divide |GL| = {group} for {rep!r}")
        aut_orders.append(group // orbit)

    logger.info("Found %d iso classes", len(reps))
    return IsoClassTable(quiver, q, caps, reps, aut_orders, probabilistic=probabilistic, guards=guards, seed=seed)
