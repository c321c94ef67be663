"""Factory for creating transform methods."""

# Import built-in modules
import logging
from typing import Any, Dict, Optional, Type

# Import local modules
from fif_wavelet.components import BaseTransform
from fif_wavelet.exceptions import NoSuchMethodError
from fif_wavelet.plugin import get_all_methods
from fif_wavelet.schema import InterpolationProblem, TransformKind
from fif_wavelet.utils import AnalysisConfig

logger = logging.getLogger(__name__)


class MethodFactory:
    """Registry of spectrum and wavelet transform methods."""

    def __init__(self) -> None:
        """Initialize factory."""
        self._methods: Dict[str, Type[BaseTransform]] = {}
        self._load_plugins()

    def _load_plugins(self) -> None:
        """Load built-in and entry-point methods."""
        for name, method_class in get_all_methods().items():
            self.register_method(name, method_class)

    def register_method(self, name: str, method_class: Type[BaseTransform]) -> None:
        """Register a method class.

        Args:
            name: Name of the method
            method_class: Method class to register
        """
        if not isinstance(method_class, type) or not issubclass(method_class, BaseTransform):
            raise TypeError("method_class must be a subclass of BaseTransform")
        self._methods[name.lower()] = method_class

    def unregister_method(self, name: str) -> None:
        """Unregister a method class.

        Args:
            name: Name of the method to unregister
        """
        self._methods.pop(name.lower(), None)

    def get_method_class(self, name: str, kind: Optional[TransformKind] = None) -> Optional[Type[BaseTransform]]:
        """Get a method class by name.

        Args:
            name: Name of the method
            kind: Required method kind, if any

        Returns:
            Optional[Type[BaseTransform]]: Method class if found, None otherwise
        """
        method_class = self._methods.get(name.lower())
        if method_class is not None and kind is not None and method_class.kind is not kind:
            return None
        return method_class

    def get_method_names(self, kind: Optional[TransformKind] = None) -> Dict[str, Type[BaseTransform]]:
        """Get registered methods.

        Args:
            kind: Restrict to one kind

        Returns:
            Dict[str, Type[BaseTransform]]: Registered methods
        """
        return {name: cls for name, cls in self._methods.items() if kind is None or cls.kind is kind}

    def create_method(
        self,
        name: str,
        problem: InterpolationProblem,
        config: Optional[AnalysisConfig] = None,
        kind: Optional[TransformKind] = None,
        **kwargs: Any,
    ) -> BaseTransform:
        """Create a method instance.

        Args:
            name: Name of the method
            problem: Interpolation problem
            config: Analysis configuration
            kind: Required method kind, if any
            **kwargs: Method options (level, J_trunc, wavelet, conjugate, ...)

        Returns:
            BaseTransform: Method instance

        Raises:
            NoSuchMethodError: If the method is not registered
        """
        method_class = self.get_method_class(name, kind)
        if method_class is None:
            available = sorted(self.get_method_names(kind))
            raise NoSuchMethodError(f"Method {name} not found", method_name=name, available_methods=available)
        logger.debug("Creating method %s", name)
        return method_class(problem, config=config, **kwargs)
