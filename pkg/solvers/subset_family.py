"""
Families of vertex subsets over which the partial clique LPs range.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Tuple

from config.settings import get_settings
from graph.oracles import maximal_cliques
from graph.side_info_graph import SideInfoGraph, VertexSet, deficiency_of_mask, mask_of, vertex_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubsetFamily:
    subsets: Tuple[VertexSet, ...]
    deficiencies: Tuple[int, ...]  # k_S of each subset
    max_subset_size: int
    restricted: bool  # True when not the full power set

    @classmethod
    def build(cls, g: SideInfoGraph, max_subset_size: Optional[int] = None) -> "SubsetFamily":
        """
        Default family: every subset when n is small enough, otherwise all
        subsets up to a size cap plus every maximal clique. Singletons are
        always included.

        Args:
            g: Graph
            max_subset_size: Explicit size cap; overrides the default policy

        Returns:
            SubsetFamily
        """
        settings = get_settings()
        if max_subset_size is None:
            max_subset_size = g.n if g.n <= settings.full_family_max_n else settings.restricted_subset_size
        max_subset_size = max(1, min(max_subset_size, g.n))
        chosen = set()
        for size in range(1, max_subset_size + 1):
            chosen.update(combinations(range(g.n), size))
        if max_subset_size < g.n:
            chosen.update(maximal_cliques(g))
            logger.info(f"subset family restricted to size <= {max_subset_size} plus maximal cliques "
                        f"({len(chosen)} subsets)")
        return cls._assemble(g, chosen, max_subset_size, restricted=max_subset_size < g.n)

    @classmethod
    def from_subsets(cls, g: SideInfoGraph, subsets: Iterable[Iterable[int]]) -> "SubsetFamily":
        """Family made of the given subsets plus every singleton."""
        chosen = {vertex_set(s, g.n) for s in subsets}
        chosen.discard(())
        chosen.update((v,) for v in range(g.n))
        full = len(chosen) == (1 << g.n) - 1
        largest = max(len(s) for s in chosen)
        return cls._assemble(g, chosen, largest, restricted=not full)

    @classmethod
    def _assemble(cls, g: SideInfoGraph, chosen, max_subset_size: int, restricted: bool) -> "SubsetFamily":
        ordered = sorted(chosen, key=lambda s: (len(s), s))
        deficiencies = tuple(deficiency_of_mask(g, mask_of(s)) for s in ordered)
        return cls(tuple(ordered), deficiencies, max_subset_size, restricted)

    def __iter__(self) -> Iterator[Tuple[VertexSet, int]]:
        return iter(zip(self.subsets, self.deficiencies))

    def __len__(self) -> int:
        return len(self.subsets)

    def __contains__(self, s) -> bool:
        return tuple(s) in set(self.subsets)
