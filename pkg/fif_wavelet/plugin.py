"""Plugin utilities for fif-wavelet."""

# Import built-in modules
import importlib
import inspect
from importlib import metadata
import logging
from typing import Dict, Optional, Type

# Import local modules
from fif_wavelet.components import BaseTransform
from fif_wavelet.exceptions import NoSuchMethodError, PluginError
from fif_wavelet.schema import TransformKind

logger = logging.getLogger(__name__)

ENTRY_POINT_GROUP = "fif_wavelet.methods"
BUILTIN_PACKAGE = "fif_wavelet.methods"


def _is_method_class(obj: object) -> bool:
    return inspect.isclass(obj) and issubclass(obj, BaseTransform) and not inspect.isabstract(obj) and bool(obj.name)


def load_method(entry_point: str) -> Type[BaseTransform]:
    """Load a transform method class from an entry point string.

    Args:
        entry_point: ``module:ClassName``

    Returns:
        Type[BaseTransform]: The method class

    Raises:
        PluginError: If the entry point cannot be loaded or is not a method class
    """
    try:
        module_name, class_name = entry_point.split(":")
        module = importlib.import_module(module_name)
        method_class = getattr(module, class_name)
    except (ImportError, AttributeError, ValueError) as e:
        raise PluginError(f"Failed to load plugin {entry_point}: {e}", plugin_path=entry_point)
    if not _is_method_class(method_class):
        raise PluginError(f"Plugin {entry_point} is not a valid transform method", plugin_path=entry_point)
    return method_class


def get_methods_from_entry_points() -> Dict[str, Type[BaseTransform]]:
    """Load method plugins registered under the ``fif_wavelet.methods`` group.

    Returns:
        Dict[str, Type[BaseTransform]]: Method names mapped to classes
    """
    methods: Dict[str, Type[BaseTransform]] = {}
    try:
        entry_points = metadata.entry_points()
        if hasattr(entry_points, "select"):  # Python 3.10+
            method_eps = entry_points.select(group=ENTRY_POINT_GROUP)
        else:  # Python 3.9
            method_eps = entry_points.get(ENTRY_POINT_GROUP, [])

        for ep in method_eps:
            try:
                method_class = load_method(f"{ep.module}:{ep.attr}")
                methods[method_class.name.lower()] = method_class
            except PluginError as e:
                logger.warning("Failed to load plugin %s: %s", ep.name, e)
    except Exception as e:
        logger.warning("Error occurred while loading entry points: %s", e)
    return methods


def load_methods(package_name: str = BUILTIN_PACKAGE) -> Dict[str, Type[BaseTransform]]:
    """Collect the method classes exported by a package.

    Args:
        package_name: Package to scan

    Returns:
        Dict[str, Type[BaseTransform]]: Method names mapped to classes
    """
    methods: Dict[str, Type[BaseTransform]] = {}
    try:
        package = importlib.import_module(package_name)
        for _, obj in inspect.getmembers(package):
            if _is_method_class(obj):
                methods[obj.name.lower()] = obj
    except ImportError as e:
        logger.error("Failed to import package %s: %s", package_name, e)
    return methods


def get_all_methods(kind: Optional[TransformKind] = None) -> Dict[str, Type[BaseTransform]]:
    """Get built-in and entry-point methods, optionally of one kind.

    Args:
        kind: Restrict to spectrum or wavelet methods

    Returns:
        Dict[str, Type[BaseTransform]]: Method names mapped to classes
    """
    methods = load_methods()
    methods.update(get_methods_from_entry_points())
    if kind is not None:
        methods = {name: cls for name, cls in methods.items() if cls.kind is kind}
    return methods


def get_method_class(name: str, kind: Optional[TransformKind] = None) -> Type[BaseTransform]:
    """Get a method class by name.

    Raises:
        NoSuchMethodError: If no method of that name is available
    """
    methods = get_all_methods(kind)
    name_lower = name.lower()
    if name_lower not in methods:
        raise NoSuchMethodError(
            f"No such method: {name}", method_name=name, available_methods=sorted(methods)
        )
    return methods[name_lower]
