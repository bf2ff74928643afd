"""Poset-diaries over {L, X, R} and big Ramsey degrees of finite partial orders."""
from . import coding, envelopes, levels, posets, variants, words
from .coding import diarize, phi, phi_tree, type_words
from .diaries import (big_ramsey_degree, color_embedding, count_diaries, enumerate_diaries,
                      enumerate_labeled_diaries, sum_over_size, validate_diary)
from .posets import FinitePoset, automorphism_count, enumerate_posets, is_isomorphic, load_poset, word_poset

__version__ = "0.1.0"
