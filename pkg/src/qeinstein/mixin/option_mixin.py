from typing import Any, Dict, Optional

from qeinstein.util import config


class OptionMixin:
    """A mixin giving classes assigned options backed by the config.

    Attributes:
        option_sections (`Dict[str, str]`): Maps an option key to the
            config section consulted when the option is unset.
    """

    option_sections: Dict[str, str] = {}

    def __init__(self, options: Optional[Dict[str, Any]] = None):
        """Pass options in the class constructor.

        Args:
            options (`Dict[str, Any]`, optional): The class
                options. Defaults to None.
        """

        self._options = {}

        if options is not None:
            self.setOptions(options)

    def setOptions(self, options: Dict[str, Any]):
        """Set the class options, dropping keys whose value is None.

        Args:
            options (`Dict[str, Any]`): The class options.

        Raises:
            TypeError: If `options` is not a dict.
        """

        if not isinstance(options, dict):
            raise TypeError('options must be of type dict')

        self._options = {
            key: value for key, value in options.items() if value is not None
        }

    def getOptions(self) -> Dict[str, Any]:
        """Get the explicitly set options.

        Returns:
            `Dict[str, Any]`: The class options.
        """

        return dict(self._options)

    def getOption(self, key: str, default: Any = None) -> Any:
        """Get the value of option `key`. Unset options fall back to the
        config section named in `option_sections`, then to `default`.

        Args:
            key (`str`): The option key.
            default (`Any`, optional): The value to return if `key` is
                set nowhere. Defaults to None.

        Returns:
            `Any`: The value of the option.
        """

        if key in self._options:
            return self._options[key]

        section = self.option_sections.get(key)

        if section is not None:
            return config.get(key, section=section, default=default)

        return default
