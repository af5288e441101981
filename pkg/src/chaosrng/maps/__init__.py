from functools import lru_cache
from inspect import signature
from typing import Any

from chaosrng.exceptions import ConfigurationError
from chaosrng.maps.base import ChaoticMap, Map1D, Map2D, State2D

__all__ = (
    "ChaoticMap",
    "ChebyshevMap",
    "GaussMap",
    "HenonMap",
    "LogisticMap",
    "Map1D",
    "Map2D",
    "State2D",
    "TentMap",
    "get_map",
    "get_map_class",
    "list_maps",
    "register_map",
)

# Global registry of map short names to classes
_map_registry: dict[str, type[ChaoticMap]] = {}


def register_map(name: str) -> "Any":
    """Decorator to register a map class with a short name.

    Args:
        name: The short name for the map (e.g., "logistic", "henon").

    Returns:
        A decorator that registers the map class.

    Example:
        Registering a custom map::

            @register_map("doubling")
            class DoublingMap(Map1D):
                ...
    """

    def decorator(cls: type[ChaoticMap]) -> type[ChaoticMap]:
        _map_registry[name] = cls
        return cls

    return decorator


@lru_cache(maxsize=1)
def _register_builtins() -> None:
    """Register the built-in maps. Called lazily to avoid import cycles."""
    from chaosrng.maps.chebyshev import ChebyshevMap
    from chaosrng.maps.gauss import GaussMap
    from chaosrng.maps.henon import HenonMap
    from chaosrng.maps.logistic import LogisticMap
    from chaosrng.maps.tent import TentMap

    _map_registry.setdefault("logistic", LogisticMap)
    _map_registry.setdefault("gauss", GaussMap)
    _map_registry.setdefault("tent", TentMap)
    _map_registry.setdefault("chebyshev", ChebyshevMap)
    _map_registry.setdefault("henon", HenonMap)


def get_map_class(name: str) -> type[ChaoticMap]:
    """Get a map class by short name.

    Args:
        name: A registered short name.

    Returns:
        The map class.

    Raises:
        ConfigurationError: If the name is not registered.
    """
    _register_builtins()
    if name not in _map_registry:
        msg = f"Unknown map: {name!r}. Available: {list(_map_registry.keys())}"
        raise ConfigurationError(msg)
    return _map_registry[name]


def get_map(name: str = "logistic", **params: Any) -> ChaoticMap:
    """Get an instantiated map by name.

    Args:
        name: A registered short name.
        **params: Map parameters, e.g. ``lam=3.9`` for the logistic map.

    Returns:
        The map instance.

    Raises:
        ConfigurationError: If the name is unknown or a parameter is not
            accepted by the map.

    Example:
        Basic usage::

            chaotic_map = get_map("chebyshev", k=3)
    """
    map_class = get_map_class(name)
    accepted = {key for key in signature(map_class.__init__).parameters if key != "self"}
    unknown = sorted(set(params) - accepted)
    if unknown:
        msg = f"Map {name!r} does not accept parameters {unknown}. Accepted: {sorted(accepted)}"
        raise ConfigurationError(msg)
    return map_class(**params)


def list_maps() -> list[str]:
    """Return a list of registered map short names."""
    _register_builtins()
    return list(_map_registry.keys())


from chaosrng.maps.chebyshev import ChebyshevMap
from chaosrng.maps.gauss import GaussMap
from chaosrng.maps.henon import HenonMap
from chaosrng.maps.logistic import LogisticMap
from chaosrng.maps.tent import TentMap
