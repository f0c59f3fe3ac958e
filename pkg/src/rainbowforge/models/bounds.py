"""Pydantic models for bound reports and table rows."""

from enum import Enum
from typing import ClassVar

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, Field, model_validator


class BoundMode(str, Enum):
    """How the 4/5-rainbow case tables are read."""

    AS_PRINTED = "as_printed"  # coefficients exactly as printed, 5/3 under the 4-rainbow heading
    CORRECTED = "corrected"  # 4/3 where the lift scaling of the t=3 table implies it


class BoundReport(BaseModel):
    """Lower/upper bounds (and exact value when known) for gamma_rt of one graph."""

    c: int | None = None
    k: int
    n: int  # outer cycle length; the graph has 2n vertices
    t: int
    lower: int
    upper: int
    exact: int | None = None
    singleton_upper: int | None = None  # bound on the singleton number where one is stated
    sources: list[str] = Field(default_factory=list)  # theorem labels from the catalog
    mode: BoundMode = BoundMode.CORRECTED
    discrepancy: str | None = None
    alternative_values: list[int] = Field(default_factory=list)  # competing exact readings

    @model_validator(mode="after")
    def check_order(self) -> Self:
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError(
                f"exact value {self.exact} outside [{self.lower}, {self.upper}]"
            )
        return self

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper


class TableRow(BaseModel):
    """One row of a bounds sweep, optionally with a solver value."""

    c: int
    k: int
    n: int
    t: int
    lower: int
    upper: int
    exact: int | None = None
    solver_value: int | None = None
    method: str = ""
    sources: list[str] = Field(default_factory=list)
    mode: str = BoundMode.CORRECTED.value

    @model_validator(mode="after")
    def check_solver_value(self) -> Self:
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if (
            self.solver_value is not None
            and self.mode == BoundMode.CORRECTED.value
            and not self.lower <= self.solver_value <= self.upper
        ):
            raise ValueError(
                f"solver value {self.solver_value} outside [{self.lower}, {self.upper}]"
            )
        return self

    CSV_COLUMNS: ClassVar[tuple[str, ...]] = (
        "c", "k", "n", "t", "lower", "upper", "exact", "solver_value", "method", "sources", "mode",
    )

    def csv_fields(self) -> list[str]:
        fields = [
            self.c,
            self.k,
            self.n,
            self.t,
            self.lower,
            self.upper,
            "" if self.exact is None else self.exact,
            "" if self.solver_value is None else self.solver_value,
            self.method,
            ";".join(self.sources),
            self.mode,
        ]
        return [str(f) for f in fields]


class TheoremKind(str, Enum):
    THEOREM = "theorem"
    PROPOSITION = "proposition"
    LEMMA = "lemma"
    OBSERVATION = "observation"  # elementary facts the catalog relies on


class TheoremEntry(BaseModel):
    """A catalog entry: the label used in report sources and the statement it stands for."""

    label: str
    kind: TheoremKind = TheoremKind.THEOREM
    statement: str
    colors: list[int] = Field(default_factory=list)  # values of t the statement concerns
    cited: bool = False  # recalled from earlier work rather than proved alongside
