"""Advice package: the budgeted teacher."""

from .teacher import (
    AdviceEvent,
    AdviceStrategy,
    Teacher,
    TeacherQuality,
    advise,
    make_teacher,
)

__all__ = [
    'AdviceEvent', 'AdviceStrategy', 'Teacher', 'TeacherQuality',
    'advise', 'make_teacher',
]
