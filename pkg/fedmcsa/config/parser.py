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

from collections import deque

from ply import yacc

from . import ast
from .lexer import Lexer
from ..errors import ConfigParserError


__all__ = ['Parser']


class ParserSpec(object):
    """Parser specification for run configuration files."""

    tokens = Lexer.tokens

    def p_error(self, p):
        if p is None:
            raise ConfigParserError('Grammar error at EOF')
        raise ConfigParserError(
            'Grammar error %r at line %d' % (p.value, p.lineno)
        )

    def p_start(self, p):
        '''start : assignment_seq'''
        p[0] = ast.Document(assignments=list(p[1]))

    def p_assignment_seq(self, p):
        '''assignment_seq : assignment assignment_seq
                          |'''
        self._parse_seq(p)

    def p_assignment(self, p):
        '''assignment : IDENTIFIER '=' value ';'
                      | IDENTIFIER '=' value'''
        p[0] = ast.Assignment(key=p[1], value=p[3], lineno=p.lineno(1))

    def p_value(self, p):
        '''value : primitive
                 | primitive ',' value_list'''
        if len(p) == 2:
            p[0] = p[1]
        else:
            p[3].appendleft(p[1])
            p[0] = tuple(p[3])

    def p_value_list(self, p):
        '''value_list : primitive ',' value_list
                      | primitive'''
        if len(p) == 2:
            p[0] = deque([p[1]])
        else:
            self._parse_seq(p)

    def p_bool(self, p):
        '''bool : TRUE
                | FALSE'''
        p[0] = p[1] == 'true'

    def p_primitive(self, p):
        '''primitive : INTCONSTANT
                     | DUBCONSTANT
                     | LITERAL
                     | IDENTIFIER
                     | bool'''
        p[0] = p[1]

    def _parse_seq(self, p):
        """Helper to parse sequence rules.

        Sequence rules are in the form::

            foo : foo_item sep foo
                | foo_item foo
                |

        This function builds a deque of the items in-order.
        """
        if len(p) == 4:
            p[3].appendleft(p[1])
            p[0] = p[3]
        elif len(p) == 3:
            p[2].appendleft(p[1])
            p[0] = p[2]
        elif len(p) == 1:
            p[0] = deque()
        else:
            raise ConfigParserError(
                'Wrong number of tokens received for expression at line %d'
                % p.lineno(1)
            )


class Parser(ParserSpec):
    """Parser for run configuration files."""

    def __init__(self, **kwargs):
        if kwargs.pop('silent', False):
            kwargs['errorlog'] = yacc.NullLogger()

        kwargs.setdefault('debug', False)
        kwargs.setdefault('write_tables', False)
        self._parser = yacc.yacc(module=self, **kwargs)
        self._lexer = Lexer()

    def parse(self, input, **kwargs):
        """Parse the given input.

        :param input:
            String containing the text to be parsed.
        :returns:
            A :py:class:`~fedmcsa.config.ast.Document`.
        :raises fedmcsa.errors.ConfigParserError:
            For parsing errors.
        """
        return self._parser.parse(input, lexer=self._lexer, **kwargs)
