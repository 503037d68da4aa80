"""
Reducible Configurations

Counts reducible contact curves through general lines by sequential
construction: choose lines from a shrinking pool, pass a component through
them, divide by the symmetry of the configuration. Recipes are read from
data/incidence_recipes.yaml; every count is evaluated, none is stored.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import yaml

from .errors import RecipeError, Unsupported
from .exactmath import binomial
from .invariants import REFERENCE_VALUES

logger = logging.getLogger(__name__)

RECIPES_PATH = Path(__file__).parent / 'data' / 'incidence_recipes.yaml'
FAMILY_DEGREES = {'cubics': 3, 'quartics': 4}


@dataclass(frozen=True)
class RecipeStep:
    lines_chosen: int
    branch: Union[str, int]

    def branch_factor(self, branch_values: Mapping[str, int]) -> int:
        if isinstance(self.branch, int):
            return self.branch
        try:
            return branch_values[self.branch]
        except KeyError:
            raise RecipeError(f"unknown branch factor {self.branch!r}") from None


@dataclass(frozen=True)
class IncidenceRecipe:
    """One incidence configuration and how to count it."""
    name: str
    subconfiguration: str
    symmetry_divisor: int
    steps: Tuple[RecipeStep, ...]

    def __post_init__(self):
        if self.symmetry_divisor < 1:
            raise RecipeError(f"{self.name}: symmetry divisor must be positive")
        if any(step.lines_chosen < 0 for step in self.steps):
            raise RecipeError(f"{self.name}: a step cannot choose a negative number of lines")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "IncidenceRecipe":
        return cls(
            name=str(data['name']),
            subconfiguration=str(data.get('subconfiguration', '')),
            symmetry_divisor=int(data.get('symmetry_divisor', 1)),
            steps=tuple(RecipeStep(int(lines), branch) for lines, branch in data.get('steps', [])),
        )

    @property
    def lines_used(self) -> int:
        return sum(step.lines_chosen for step in self.steps)


def count_recipe(recipe: IncidenceRecipe, pool: int,
                 branch_values: Optional[Mapping[str, int]] = None) -> int:
    """
    (1/divisor) * prod over steps of binomial(remaining, chosen) * branch factor.

    Raises:
        RecipeError: the pool runs out, or the divisor does not divide the product
    """
    branch_values = branch_values or {}
    remaining = pool
    product = 1
    for index, step in enumerate(recipe.steps):
        if step.lines_chosen > remaining:
            raise RecipeError(
                f"{recipe.name}: step {index} chooses {step.lines_chosen} lines, only {remaining} left"
            )
        product *= binomial(remaining, step.lines_chosen) * step.branch_factor(branch_values)
        remaining -= step.lines_chosen
    count, rest = divmod(product, recipe.symmetry_divisor)
    if rest:
        raise RecipeError(f"{recipe.name}: {product} is not divisible by {recipe.symmetry_divisor}")
    return count


@dataclass
class ConfigEntry:
    recipe: IncidenceRecipe
    count: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.recipe.name,
            'subconfiguration': self.recipe.subconfiguration,
            'symmetry_divisor': self.recipe.symmetry_divisor,
            'steps': [[step.lines_chosen, step.branch] for step in self.recipe.steps],
            'count': self.count,
        }


@dataclass
class ConfigTable:
    family: str
    degree: int
    pool: int
    assumption: str
    entries: List[ConfigEntry] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(entry.count for entry in self.entries)

    def count_of(self, name: str, subconfiguration: Optional[str] = None) -> int:
        for entry in self.entries:
            if entry.recipe.name == name and subconfiguration in (None, entry.recipe.subconfiguration):
                return entry.count
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'family': self.family,
            'degree': self.degree,
            'pool': self.pool,
            'assumption': self.assumption,
            'entries': [entry.to_dict() for entry in self.entries],
            'total': self.total,
        }


@lru_cache(maxsize=1)
def load_recipes(path: Path = RECIPES_PATH) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as handle:
        return yaml.safe_load(handle)


def contact_invariants(invariants: Optional[Mapping[int, int]] = None) -> Dict[int, int]:
    """N_d by degree; the published values fill in any degree not given."""
    return {**REFERENCE_VALUES['contact'], **(invariants or {})}


def family_degree(family: str) -> int:
    try:
        return FAMILY_DEGREES[family.strip().lower()]
    except KeyError:
        raise Unsupported(
            f"no configuration table for family {family!r} (supported: {', '.join(FAMILY_DEGREES)})"
        ) from None


def required_degrees(family: str) -> Tuple[int, ...]:
    """Degrees whose contact invariants a family's table and estimate depend on."""
    return tuple(sorted({1, 3, family_degree(family)}))


def branch_values(family: str, invariants: Optional[Mapping[int, int]] = None) -> Dict[str, int]:
    """
    Branch factors named by the recipes.

    contact_lines is N_1, the contact lines meeting three general lines;
    irreducible_cubics is N_3 less the reducible cubics.
    """
    n = contact_invariants(invariants)
    values = {'contact_lines': n[1]}
    if family_degree(family) == 4:
        values['irreducible_cubics'] = n[3] - cubic_configuration_table(n).total
    return values


def _build_table(family: str, values: Mapping[str, int]) -> ConfigTable:
    data = load_recipes()
    spec = data['families'][family]
    table = ConfigTable(
        family=family,
        degree=int(spec['degree']),
        pool=int(spec['pool']),
        assumption=' '.join(data.get('assumption', '').split()),
    )
    for raw in spec['recipes']:
        recipe = IncidenceRecipe.from_dict(raw)
        if recipe.lines_used > table.pool:
            raise RecipeError(f"{recipe.name}: uses {recipe.lines_used} lines, pool has {table.pool}")
        table.entries.append(ConfigEntry(recipe, count_recipe(recipe, table.pool, values)))
    logger.debug(f"{family}: {len(table.entries)} configurations, total {table.total}")
    return table


def cubic_configuration_table(invariants: Optional[Mapping[int, int]] = None) -> ConfigTable:
    return _build_table('cubics', branch_values('cubics', invariants))


def quartic_configuration_table(invariants: Optional[Mapping[int, int]] = None) -> ConfigTable:
    """Quartic table; the (3+1) entry also depends on N_3 through the irreducible cubics."""
    return _build_table('quartics', branch_values('quartics', invariants))


def configuration_table(family: str, invariants: Optional[Mapping[int, int]] = None) -> ConfigTable:
    if family_degree(family) == 3:
        return cubic_configuration_table(invariants)
    return quartic_configuration_table(invariants)


def irreducible_estimate(degree: int, n_d: int, invariants: Optional[Mapping[int, int]] = None) -> int:
    """n_d minus the reducible configurations of that degree."""
    if degree == 3:
        return n_d - cubic_configuration_table(invariants).total
    if degree == 4:
        return n_d - quartic_configuration_table(invariants).total
    raise Unsupported(f"irreducible estimates exist only for degrees 3 and 4, got {degree}")
