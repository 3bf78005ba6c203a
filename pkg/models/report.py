from typing import Dict, List, Optional

import orjson
from pydantic import BaseModel

from models.certificate import CodeCertificate
from models.rational import RationalValue


class FamilyEntry(BaseModel):
    theorem_id: str
    description: str
    hypothesis_met: bool
    bound: Optional[RationalValue] = None
    measured: Optional[RationalValue] = None
    verdict: str
    note: str = ""


class FamilyReport(BaseModel):
    entries: List[FamilyEntry] = []
    quantities: Dict[str, RationalValue] = {}


class GraphMeta(BaseModel):
    n: int
    edge_count: int
    undirected: bool
    source: Optional[str] = None


class BoundEntry(BaseModel):
    value: RationalValue
    family_restricted: bool = False
    description: str = ""


class BoundsReport(BaseModel):
    version: str
    seed: Optional[int] = None
    graph: GraphMeta
    bounds: Dict[str, BoundEntry] = {}
    skipped: Dict[str, str] = {}  # bound name -> reason
    certificates: List[CodeCertificate] = []
    family_report: Optional[FamilyReport] = None
    timings_ms: Optional[Dict[str, int]] = None

    def to_json(self) -> bytes:
        return orjson.dumps(self.model_dump(exclude_none=True), option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2)
