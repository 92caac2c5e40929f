import dataclasses
import typing

from ..core import InvalidParameters


_TRUE = ('1', 'true', 'yes', 'on')
_FALSE = ('0', 'false', 'no', 'off')


class OptionsDict(dict):
    """
    A dict whose ``merge`` updates nested dictionaries key by key instead of
    replacing them, except for the keys listed in ``replaced_keys``.

    >>> d = OptionsDict({'tgsr': {'OPTIONS': {'mu': 0.75}}})
    >>> d.merge({'tgsr': {'ENGINE': 'my.Engine'}})
    >>> d
    {'tgsr': {'OPTIONS': {'mu': 0.75}, 'ENGINE': 'my.Engine'}}
    """

    def __init__(self, *args, replaced_keys=(), **kwargs):
        self.replaced_keys = tuple(replaced_keys)
        super().__init__(*args, **kwargs)

    def merge(self, other):
        for key, value in dict(other).items():
            current = self.get(key)
            if isinstance(current, dict) and isinstance(value, dict) and key not in self.replaced_keys:
                nested = OptionsDict(current, replaced_keys=self.replaced_keys)
                nested.merge(value)
                self[key] = nested
            else:
                self[key] = value


def parameter_fields(params_class):
    hints = typing.get_type_hints(params_class)
    return {f.name: hints[f.name] for f in dataclasses.fields(params_class)}


def coerce_option(params_class, key, value):
    """
    Convert ``value`` (usually a string from the command line or a plan file)
    to the type declared for ``key`` on the parameter dataclass.
    """
    fields = parameter_fields(params_class)
    if key not in fields:
        raise InvalidParameters(
            f"unknown parameter '{key}', expected one of: {', '.join(sorted(fields))}")
    kind = fields[key]
    if kind is bool:
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in _TRUE:
            return True
        if text in _FALSE:
            return False
        raise InvalidParameters(f"parameter '{key}' expects a boolean, got {value!r}")
    if kind is int:
        try:
            number = float(value)
        except (TypeError, ValueError):
            raise InvalidParameters(f"parameter '{key}' expects an integer, got {value!r}") from None
        if not number.is_integer():
            raise InvalidParameters(f"parameter '{key}' expects an integer, got {value!r}")
        return int(number)
    if kind is float:
        try:
            return float(value)
        except (TypeError, ValueError):
            raise InvalidParameters(f"parameter '{key}' expects a number, got {value!r}") from None
    return kind(value)


def coerce_options(params_class, options):
    return {key: coerce_option(params_class, key, value) for key, value in dict(options).items()}


def parse_assignment(text):
    """
    Split a ``key=value`` override.
    """
    key, sep, value = str(text).partition('=')
    key = key.strip()
    if not sep or not key:
        raise InvalidParameters(f"expected key=value, got {text!r}")
    return key, value.strip()
