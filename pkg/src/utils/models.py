from typing import List, Optional, Dict, Any, Tuple, Union
from pydantic import BaseModel, Field, model_validator


# Configuration Models
class QuiverConfig(BaseModel):
    vertex_count: int = Field(ge=1)
    arrows: List[Tuple[int, int]] = []


class ResourceGuards(BaseModel):
    """Caps on the brute-force parts of the computation"""
    max_matrices: int = Field(default=1_000_000, ge=1)
    max_hom_elements: int = Field(default=1_000_000, ge=1)
    iso_search_cap: int = Field(default=1_000_000, ge=1)
    iso_samples: int = Field(default=4096, ge=1)
    max_rewrite_steps: int = Field(default=1_000_000, ge=1)


class HallConfig(BaseModel):
    """Configuration for a hallcalc session"""
    quiver: QuiverConfig = QuiverConfig(vertex_count=1)
    q: int = 2
    dim_caps: List[int] = [2]
    total_dim_cap: Optional[int] = None
    cache_path: Optional[str] = None
    seed: int = 0
    threads: int = Field(default=1, ge=1)
    guards: ResourceGuards = ResourceGuards()

    @model_validator(mode="after")
    def _check_shape(self) -> "HallConfig":
        if len(self.dim_caps) != self.quiver.vertex_count:
            raise ValueError(
                f"dim_caps has {len(self.dim_caps)} entries, quiver has {self.quiver.vertex_count} vertices"
            )
        if any(cap < 0 for cap in self.dim_caps):
            raise ValueError("dim_caps must be non-negative")
        if self.total_dim_cap is not None and self.total_dim_cap < 0:
            raise ValueError("total_dim_cap must be non-negative")
        return self

    @property
    def effective_total_cap(self) -> int:
        return sum(self.dim_caps) if self.total_dim_cap is None else self.total_dim_cap


# Report Models
class CheckFailure(BaseModel):
    instance: Dict[str, Any]
    lhs: str
    rhs: str
    note: Optional[str] = None


class CheckReport(BaseModel):
    """Outcome of one verification suite"""
    check: str
    parameter_space: str
    instances: int = 0
    failures: List[CheckFailure] = []
    # kept out of the JSON dump so reports stay byte-identical across runs
    wall_time: float = Field(default=0.0, exclude=True)

    @property
    def passed(self) -> bool:
        return not self.failures


# Wire Models
class TorusFactorPayload(BaseModel):
    degree: int
    exponents: List[int]


class StalkFactorPayload(BaseModel):
    degree: int
    iso_class_id: Union[int, str]


class TermPayload(BaseModel):
    coefficient: str = "1/1"
    torus: List[TorusFactorPayload] = []
    stalks: List[StalkFactorPayload] = []


class ElementPayload(BaseModel):
    terms: List[TermPayload] = []


class ProductRequest(BaseModel):
    left: ElementPayload
    right: ElementPayload


class ReducedFormPayload(BaseModel):
    coefficient: str
    word: TermPayload


class DecompositionPayload(BaseModel):
    derived_word: List[StalkFactorPayload]
    torus: List[TorusFactorPayload]


class ComponentPayload(BaseModel):
    degree: int
    dim_vector: List[int]
    arrow_maps: List[List[List[int]]] = []


class DifferentialPayload(BaseModel):
    from_degree: int
    vertex_maps: List[List[List[int]]]


class ComplexPayload(BaseModel):
    degrees: List[ComponentPayload]
    differentials: List[DifferentialPayload] = []


# Cache Models
class IsoClassPayload(BaseModel):
    id: int
    alias: str
    dim_vector: List[int]
    end_dim: int
    aut_order: int
    decomposition: List[int]
    probabilistic: bool = False
    arrow_maps: List[List[List[int]]]


class TableCacheKey(BaseModel):
    version: int
    vertex_count: int
    arrows: List[Tuple[int, int]]
    q: int
    dim_caps: List[int]


class TableCachePayload(BaseModel):
    key: TableCacheKey
    classes: List[IsoClassPayload]
