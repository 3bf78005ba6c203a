from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np
import orjson
from pydantic import BaseModel, ValidationError, model_validator

from models.rational import RationalValue
from utils.exceptions import InputException


class CodeCertificate(BaseModel):
    scheme: str
    modulus: int
    vectors_per_vertex: int  # N
    height: int
    vectors: List[List[List[int]]]  # vertex -> N column vectors of length height
    rate: RationalValue
    seed: Optional[int] = None
    verified: bool = False
    diagnostics: Dict[str, Any] = {}

    @model_validator(mode="after")
    def check_shape(self):
        if self.modulus < 2 or self.vectors_per_vertex < 1 or self.height < 0:
            raise ValueError("modulus, N and height must be positive")
        for v, vertex_vectors in enumerate(self.vectors):
            if len(vertex_vectors) != self.vectors_per_vertex:
                raise ValueError(f"vertex {v + 1} has {len(vertex_vectors)} vectors, expected {self.vectors_per_vertex}")
            for vector in vertex_vectors:
                if len(vector) != self.height:
                    raise ValueError(f"vertex {v + 1} has a vector of length {len(vector)}, expected {self.height}")
                if any(x < 0 or x >= self.modulus for x in vector):
                    raise ValueError(f"vertex {v + 1} has entries outside GF({self.modulus})")
        if self.rate.num * self.vectors_per_vertex != self.height * self.rate.den:
            raise ValueError(f"rate {self.rate.value} does not equal height {self.height} / N {self.vectors_per_vertex}")
        return self

    @property
    def n(self) -> int:
        return len(self.vectors)

    def vertex_matrix(self, v: int) -> np.ndarray:
        """height x N integer matrix of vertex v's vectors."""
        return np.array(self.vectors[v], dtype=np.int64).reshape(self.vectors_per_vertex, self.height).T

    def stacked(self) -> np.ndarray:
        """height x (n * N) matrix, vertex-major."""
        if not self.vectors:
            return np.zeros((self.height, 0), dtype=np.int64)
        return np.hstack([self.vertex_matrix(v) for v in range(self.n)])

    @classmethod
    def from_matrix(cls, scheme: str, modulus: int, matrix: np.ndarray, n: int, vectors_per_vertex: int,
                    seed: Optional[int] = None, diagnostics: Optional[Dict[str, Any]] = None) -> "CodeCertificate":
        """Build from a height x (n * N) vertex-major matrix."""
        height = int(matrix.shape[0])
        vectors = [
            [[int(x) for x in matrix[:, v * vectors_per_vertex + j]] for j in range(vectors_per_vertex)]
            for v in range(n)
        ]
        return cls(
            scheme=scheme,
            modulus=modulus,
            vectors_per_vertex=vectors_per_vertex,
            height=height,
            vectors=vectors,
            rate=RationalValue.from_fraction(Fraction(height, vectors_per_vertex)),
            seed=seed,
            diagnostics=diagnostics or {},
        )

    def to_json(self) -> bytes:
        return orjson.dumps(self.model_dump(), option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2)


def load_certificate(data: Union[bytes, str]) -> CodeCertificate:
    try:
        return CodeCertificate.model_validate(orjson.loads(data))
    except orjson.JSONDecodeError as e:
        raise InputException(f"certificate is not valid JSON: {e}")
    except ValidationError as e:
        raise InputException(f"invalid certificate: {e.errors()[0]['msg']}")


def read_certificate(path: Union[str, Path]) -> CodeCertificate:
    path = Path(path)
    try:
        return load_certificate(path.read_bytes())
    except OSError as e:
        raise InputException(f"cannot read certificate {path}: {e.strerror}")
