"""2x2 matrices over any commutative ring whose elements support + - *."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["Mat2", "word_product"]


@dataclass(frozen=True)
class Mat2:
    a: object
    b: object
    c: object
    d: object

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def trace(self):
        return self.a + self.d

    def det(self):
        return self.a * self.d - self.b * self.c

    def adj(self) -> "Mat2":
        """Adjugate; the inverse for unit-determinant matrices."""
        return Mat2(self.d, -self.b, -self.c, self.a)

    def power(self, n: int, one, zero) -> "Mat2":
        """M^n by binary powering; negative n uses the adjugate (det M = 1 assumed)."""
        base = self if n >= 0 else self.adj()
        n = abs(n)
        result = Mat2(one, zero, zero, one)
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def max_abs(self):
        return max(abs(e) for e in self.entries())


def word_product(word: str, A: Mat2, B: Mat2, one, zero) -> Mat2:
    """Image of a word in a, b (upper case = inverse) under a -> A, b -> B."""
    images = {"a": A, "b": B, "A": A.adj(), "B": B.adj()}
    out = Mat2(one, zero, zero, one)
    for letter in word:
        out = out @ images[letter]
    return out
