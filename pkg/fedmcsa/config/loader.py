# Copyright (c) 2026 The fedmcsa Authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

from __future__ import absolute_import, unicode_literals, print_function

from collections import OrderedDict
import re

from .parser import Parser
from ..errors import ConfigError

__all__ = ['Loader', 'loads', 'load', 'dumps', 'normalize_key']

#: Alternative spellings accepted for keys.
KEY_ALIASES = {
    'lambda': 'lam',
}

_BARE_WORD = re.compile(r'^[a-zA-Z_][a-zA-Z0-9_\-\.]*$')


def normalize_key(key):
    """Map a file key or flag name to its :py:class:`RunConfig` field."""
    key = key.replace('-', '_')
    return KEY_ALIASES.get(key, key)


class Loader(object):
    """Reads run configuration files into key/value mappings."""

    __slots__ = ('parser', 'fields')

    def __init__(self, fields=None):
        """Initialize a loader.

        :param fields:
            Collection of accepted (normalized) keys. Any other key is
            rejected. All keys are accepted if omitted.
        """
        self.parser = Parser(silent=True)
        self.fields = frozenset(fields) if fields is not None else None

    def loads(self, document, path=None):
        """Parse the given configuration document.

        :param str document:
            Contents of the configuration file.
        :param str path:
            Path used in error messages.
        :returns:
            An ordered mapping from normalized key to value.
        :raises fedmcsa.errors.ConfigError:
            If the document cannot be parsed, repeats a key or contains an
            unknown key.
        """
        where = ('%s: ' % path) if path else ''
        values = OrderedDict()
        seen = {}
        for assignment in self.parser.parse(document).assignments:
            key = normalize_key(assignment.key)
            if self.fields is not None and key not in self.fields:
                raise ConfigError(
                    '%sUnknown key "%s" at line %d'
                    % (where, assignment.key, assignment.lineno)
                )
            if key in seen:
                raise ConfigError(
                    '%sKey "%s" at line %d is already set at line %d'
                    % (where, assignment.key, assignment.lineno, seen[key])
                )
            seen[key] = assignment.lineno
            values[key] = assignment.value
        return values

    def load(self, path):
        """Parse the configuration file at ``path``.

        :param str path:
            Path to the file.
        """
        try:
            with open(path, 'r') as f:
                document = f.read()
        except (IOError, OSError) as e:
            raise ConfigError('Cannot read config file "%s": %s' % (path, e))
        return self.loads(document, path=path)


def _format(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (int, float)):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return ', '.join(_format(v) for v in value)
    value = '%s' % value
    if _BARE_WORD.match(value) and value not in ('true', 'false'):
        return value
    return '"%s"' % value.replace('\\', '\\\\').replace('"', '\\"')


def dumps(values, header=None):
    """Write a mapping (or :py:class:`~fedmcsa.config.RunConfig`) in the
    configuration file format.

    ``None`` values are left out. The output parses back to the same values
    with :py:meth:`Loader.loads`.
    """
    if hasattr(values, 'to_dict'):
        values = values.to_dict()
    lines = []
    if header:
        lines.extend('# %s' % line for line in header.splitlines())
    for key, value in values.items():
        if value is None:
            continue
        lines.append('%s = %s' % (key, _format(value)))
    return '\n'.join(lines) + '\n'


_DEFAULT_LOADER = None


def _default_loader():
    global _DEFAULT_LOADER
    if _DEFAULT_LOADER is None:
        _DEFAULT_LOADER = Loader()
    return _DEFAULT_LOADER


def loads(document, path=None):
    """Parse a configuration document, accepting any key."""
    return _default_loader().loads(document, path=path)


def load(path):
    """Parse a configuration file, accepting any key."""
    return _default_loader().load(path)
