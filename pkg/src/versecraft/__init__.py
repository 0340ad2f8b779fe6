"""Instruction-driven collaborative verse writing.

Library layers, roughly bottom-up: ``textkit`` (tokenization and overlap
metrics), ``phonetics`` (pronunciation lexicon, rhyme, syllables),
``instructions`` (the constraint grammar and template catalog), ``synthesis``
(instruction/verse pair derivation from a poetry corpus), ``generation``
(pluggable line generators), ``evaluation`` (constraint checking and the
success-rate harness), ``session`` (event-sourced co-writing sessions and
contribution analytics), ``service`` (HTTP API), and ``cli``.
"""

__version__ = "0.1.0"
