"""
Fan construction for Bott towers.
"""

from src.tower.fan import (
    BottNumbers,
    BottTower,
    MaximalCone,
    Ray,
    Side,
    Wall,
    build_tower,
    cone_determinant,
    enumerate_walls,
    expected_determinant,
    tower_from_rows,
    vertical_subtower,
)

__all__ = [
    "BottNumbers",
    "BottTower",
    "MaximalCone",
    "Ray",
    "Side",
    "Wall",
    "build_tower",
    "cone_determinant",
    "enumerate_walls",
    "expected_determinant",
    "tower_from_rows",
    "vertical_subtower",
]
