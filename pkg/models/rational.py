from fractions import Fraction

from pydantic import BaseModel


class RationalValue(BaseModel):
    value: str  # "5/2", or "3" for integers
    num: int
    den: int

    @classmethod
    def from_fraction(cls, q) -> "RationalValue":
        q = Fraction(q)
        text = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        return cls(value=text, num=q.numerator, den=q.denominator)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)
