"""Data models for TraceHankel project."""

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator, model_validator

from src.arithmetic.fields import RATIONALS, is_prime
from src.common.constants import PRIME_FIELD_PREFIX
from src.config.config import Config


class HankelSpec(BaseModel):
    """Пара (t, l), выбирающая матрицу M_{t,l} из семейства."""

    model_config = ConfigDict(frozen=True)

    t: int = Field(ge=1)
    l: int = Field(default=0, ge=0)  # noqa: E741


class Spectrum(BaseModel):
    """Различные собственные значения λ_1..λ_m и их алгебраические кратности p_1..p_m."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eigenvalues: tuple[Any, ...]
    multiplicities: tuple[PositiveInt, ...]
    field: Any = RATIONALS

    @model_validator(mode="before")
    @classmethod
    def coerce_eigenvalues(cls, data: Any) -> Any:
        """Приведение собственных значений к элементам поля."""
        if isinstance(data, dict):
            field = data.get("field", RATIONALS)
            data = {**data, "eigenvalues": tuple(field.coerce(v) for v in data.get("eigenvalues", ()))}
        return data

    @model_validator(mode="after")
    def check_distinct(self) -> "Spectrum":
        """Проверка попарной различности и согласованности длин."""
        if not self.eigenvalues:
            raise ValueError("spectrum must contain at least one eigenvalue")
        if len(self.eigenvalues) != len(self.multiplicities):
            raise ValueError(
                f"{len(self.eigenvalues)} eigenvalues but {len(self.multiplicities)} multiplicities",
            )
        if len(set(self.eigenvalues)) != len(self.eigenvalues):
            raise ValueError("eigenvalues must be pairwise distinct")
        return self

    @classmethod
    def from_pairs(cls, pairs, field=RATIONALS) -> "Spectrum":
        pairs = list(pairs)
        return cls(
            eigenvalues=tuple(value for value, _ in pairs),
            multiplicities=tuple(multiplicity for _, multiplicity in pairs),
            field=field,
        )

    @property
    def distinct_count(self) -> int:
        return len(self.eigenvalues)

    @property
    def order(self) -> int:
        return sum(self.multiplicities)


class GraphSpec(BaseModel):
    """Простой граф: число вершин и список рёбер с вершинами 1..n."""

    model_config = ConfigDict(frozen=True)

    vertex_count: PositiveInt
    edges: tuple[tuple[int, int], ...] = ()
    directed: bool = False

    @model_validator(mode="before")
    @classmethod
    def normalize_edges(cls, data: Any) -> Any:
        """Неориентированные рёбра хранятся как (меньшая, большая) вершина, без дубликатов."""
        if not isinstance(data, dict):
            return data
        directed = data.get("directed", False)
        seen: dict = {}
        for u, v in data.get("edges", ()):
            edge = (u, v) if directed else (min(u, v), max(u, v))
            seen.setdefault(edge, None)
        return {**data, "edges": tuple(seen)}

    @model_validator(mode="after")
    def check_endpoints(self) -> "GraphSpec":
        """Проверка диапазона вершин и отсутствия петель."""
        for u, v in self.edges:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{self.vertex_count}")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed in a simple graph")
        return self


class RunConfig(BaseModel):
    """Параметры одного запуска CLI."""

    model_config = ConfigDict(frozen=True)

    command: Literal["spectral-size", "spectral-poly", "hankel-det", "degenerate", "verify"]
    input_path: Optional[str] = None
    input_format: Literal["dense", "edges", "mm"] = "dense"
    field_spec: str = "rational"
    t: Optional[int] = Field(default=None, ge=1)
    l: int = Field(default=0, ge=0)  # noqa: E741
    output_format: Literal["text", "json"] = "text"
    seed: Optional[int] = None

    @field_validator("field_spec")
    @classmethod
    def check_modulus(cls, v: str) -> str:
        """Модуль поля GF(p) обязан быть простым."""
        v = v.strip().lower()
        if v.startswith(PRIME_FIELD_PREFIX):
            digits = v[len(PRIME_FIELD_PREFIX) :]
            if not digits.isdigit() or not is_prime(int(digits)):
                raise ValueError(f"gf modulus must be a prime, got {digits!r}")
        return v

    @model_validator(mode="after")
    def check_command_arguments(self) -> "RunConfig":
        """Проверка аргументов, обязательных для конкретной команды."""
        if self.command != "verify" and not self.input_path:
            raise ValueError(f"command {self.command} needs an input path ('-' for standard input)")
        if self.command == "hankel-det" and self.t is None:
            raise ValueError("hankel-det needs -t")
        return self


class VerificationPlan(BaseModel):
    """Размеры выборок проверочного набора; значения по умолчанию берутся из Config."""

    model_config = ConfigDict(frozen=True)

    spectra: int = Field(default_factory=lambda: Config.VERIFY_SPECTRA, ge=0)
    max_distinct: int = Field(default_factory=lambda: Config.VERIFY_MAX_DISTINCT, ge=1)
    max_multiplicity: int = Field(default_factory=lambda: Config.VERIFY_MAX_MULTIPLICITY, ge=1)
    eigenvalue_bound: int = Field(default_factory=lambda: Config.VERIFY_EIGENVALUE_BOUND, ge=1)
    max_l: int = Field(default_factory=lambda: Config.VERIFY_MAX_L, ge=0)
    random_matrices: int = Field(default_factory=lambda: Config.VERIFY_RANDOM_MATRICES, ge=0)
    random_order: int = Field(default_factory=lambda: Config.VERIFY_RANDOM_ORDER, ge=1)
    entry_bound: int = Field(default_factory=lambda: Config.VERIFY_ENTRY_BOUND, ge=1)
    symmetric: int = Field(default_factory=lambda: Config.VERIFY_SYMMETRIC, ge=0)
    symmetric_order: int = Field(default_factory=lambda: Config.VERIFY_SYMMETRIC_ORDER, ge=1)
    minimal: int = Field(default_factory=lambda: Config.VERIFY_MINIMAL, ge=0)
    scaling: int = Field(default_factory=lambda: Config.VERIFY_SCALING, ge=0)
    max_counterexamples: int = Field(default_factory=lambda: Config.MAX_COUNTEREXAMPLES, ge=0)


class TheoremWitness(BaseModel):
    """Сравнение det M_{t,l}(G) с замкнутой формулой по спектру."""

    t: int
    l: int  # noqa: E741
    lhs: str
    rhs: str
    equal: bool


class ScalingWitness(BaseModel):
    """Сравнение det M_{t,l}(cG) с c^{tl+t(t-1)}·det M_{t,l}(G)."""

    t: int
    l: int  # noqa: E741
    c: str
    exponent: int
    lhs: str
    rhs: str
    equal: bool


class HankelDeterminant(BaseModel):
    t: int
    l: int  # noqa: E741
    value: str


class AnalysisReport(BaseModel):
    """Итог анализа матрицы: спектральный размер, вырожденность, спектральный многочлен."""

    order: int
    field: str
    spectral_size: int
    degenerate: Optional[bool]
    spectral_polynomial: list[str]
    hankel_determinants: list[HankelDeterminant]
    oracle_agreement: Optional[bool] = None
    caveat: Optional[str] = None


class HankelDeterminantReport(BaseModel):
    order: int
    field: str
    t: int
    l: int  # noqa: E741
    value: str


class Counterexample(BaseModel):
    check: str
    detail: dict[str, Any]


class CheckReport(BaseModel):
    name: str
    samples: int = 0
    failures: int = 0
    counterexamples: list[Counterexample] = []

    @property
    def passed(self) -> bool:
        return self.failures == 0


class VerificationSummary(BaseModel):
    """Итог прогона проверочного набора."""

    seed: int
    passed: bool
    checks: list[CheckReport]
