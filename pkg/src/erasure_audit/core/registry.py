"""
Protocol registry for box experiments.

Uses decorator-based registration, so a new protocol only needs a class in
``erasure_audit.szilard.protocols``.
"""

import logging
from collections.abc import Callable

from erasure_audit.core.exceptions import DomainError
from erasure_audit.core.protocol import BoxProtocol

logger = logging.getLogger(__name__)


class ProtocolRegistry:
    """
    Registry of box protocols.

    Example:
        >>> @ProtocolRegistry.register("reset")
        ... class ResetProtocol:
        ...     ...

        >>> protocol = ProtocolRegistry.get("reset")
    """

    _protocols: dict[str, type[BoxProtocol]] = {}

    # Lazily created instances
    _instances: dict[str, BoxProtocol] = {}

    @classmethod
    def register(cls, name: str) -> Callable[[type[BoxProtocol]], type[BoxProtocol]]:
        """
        Decorator to register a protocol class under ``name``.

        Args:
            name: CLI identifier, e.g. "perpetuum"
        """

        def decorator(protocol_cls: type[BoxProtocol]) -> type[BoxProtocol]:
            cls._protocols[name] = protocol_cls
            cls._instances.pop(name, None)
            logger.debug(f"Registered box protocol: {name}")
            return protocol_cls

        return decorator

    @classmethod
    def get(cls, name: str) -> BoxProtocol:
        """
        Get a protocol instance by name.

        Raises:
            DomainError: If no protocol is registered under ``name``
        """
        if name not in cls._instances:
            if name not in cls._protocols:
                raise DomainError("protocol", name, f"one of {cls.list_protocols()}")
            cls._instances[name] = cls._protocols[name]()
        return cls._instances[name]

    @classmethod
    def list_protocols(cls) -> list[str]:
        return list(cls._protocols)
