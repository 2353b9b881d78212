"""Shared caches so tests reuse groups, marks tables, and contexts."""

from burnside.exttor import ExtTorContext
from burnside.groups import parse_group
from burnside.marks import table_of_marks
from burnside.permgroup import subgroup_classes

_GROUPS = {}
_CLASSES = {}
_MARKS = {}
_CTX = {}


def get_group(name):
    if name not in _GROUPS:
        _GROUPS[name] = parse_group(name)
    return _GROUPS[name]


def get_classes(name):
    if name not in _CLASSES:
        _CLASSES[name] = subgroup_classes(get_group(name))
    return _CLASSES[name]


def get_marks(name):
    if name not in _MARKS:
        _MARKS[name] = table_of_marks(get_group(name), get_classes(name))
    return _MARKS[name]


def get_context(name) -> ExtTorContext:
    if name not in _CTX:
        _CTX[name] = ExtTorContext.from_marks(get_marks(name), name)
    return _CTX[name]
