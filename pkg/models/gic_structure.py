from typing import Dict, List

from pydantic import BaseModel


class GicStructureFile(BaseModel):
    inner: List[int]  # 1-based
    k: int
    parents: Dict[str, List[int]] = {}  # root -> parent of each vertex in its tree, 0 if absent
