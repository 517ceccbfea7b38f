from typing import List

from pydantic import BaseModel, Field, model_validator


class GradeIndexSet(BaseModel):
    """
    Grades present in a multivector.
    Reported alongside calculator results.
    """
    dim: int = Field(..., ge=0, description="Ambient dimension n")

    grades: List[int] = Field(
        default_factory=list,
        description="Sorted grades k with a nonzero k-part, each in 0..n"
    )

    @model_validator(mode="after")
    def check_grades(self) -> "GradeIndexSet":
        if any(k < 0 or k > self.dim for k in self.grades):
            raise ValueError(f"grades must lie in 0..{self.dim}: {self.grades}")
        self.grades = sorted(set(self.grades))
        return self

    def __contains__(self, k: int) -> bool:
        return k in self.grades

    def is_homogeneous(self) -> bool:
        return len(self.grades) <= 1
