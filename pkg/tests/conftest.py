from __future__ import annotations

import pytest

from coxcent.coxtype import CoxeterType
from coxcent.group import CoxeterGroup
from coxcent.involutions import enumerate_involution_classes
from coxcent.structure import profiles_for_group


class GroupCache:
    """Build each group (and its classes/profiles) once per test session."""

    def __init__(self):
        self._groups: dict = {}
        self._classes: dict = {}
        self._profiles: dict = {}

    def group(self, family: str, n: int) -> CoxeterGroup:
        key = (family, n)
        if key not in self._groups:
            self._groups[key] = CoxeterGroup(CoxeterType([key]))
        return self._groups[key]

    def classes(self, family: str, n: int):
        key = (family, n)
        if key not in self._classes:
            self._classes[key] = enumerate_involution_classes(self.group(family, n))
        return self._classes[key]

    def profiles(self, family: str, n: int):
        key = (family, n)
        if key not in self._profiles:
            self._profiles[key] = profiles_for_group(
                self.group(family, n), self.classes(family, n)
            )
        return self._profiles[key]


@pytest.fixture(scope="session")
def cache() -> GroupCache:
    return GroupCache()
