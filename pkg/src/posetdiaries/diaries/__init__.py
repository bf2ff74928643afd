"""Poset-diaries: level events, validation, enumeration and big Ramsey degrees."""
from ..levels import LevelStructure, check_level_axioms
from .events import (AmbiguousLevel, DiaryError, Event, EventError, InvalidLevel, Leaf, LoggedEvent,
                     NewPerp, NewPrec, Split, apply_event, classify_transition, closure_levels,
                     event_log_json, format_diary, is_diary, parse_diary, successors, validate_diary)
from .search import (BoundError, codes, count_labeled, count_unlabeled_by_size, enumerate_diaries,
                     enumerate_labeled_diaries, find_labeled_diary, random_labeled_diary)
from .degrees import big_ramsey_degree, color_embedding, count_diaries, sum_over_size
