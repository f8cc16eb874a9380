"""Arithmeticity and commensurability of Fuchsian triangle groups.

Both questions are answered by lookup in bundled classification data: the
85 arithmetic signatures and their partition into 19 commensurability
classes. Files carry a sha256 over their payload, verified on load.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .datafiles import load_json
from .restrict import TriangleSignature


class DataIntegrityError(ValueError):
    pass


def payload_digest(obj):
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _verified(name, key):
    doc = load_json(name)
    want = doc["checksum"]["value"]
    got = payload_digest(doc[key])
    if got != want:
        raise DataIntegrityError(f"{name}: checksum mismatch (header {want[:12]}..., payload {got[:12]}...)")
    return doc


@dataclass(frozen=True)
class TriangleClassData:
    arithmetic: frozenset
    classes: dict  # label -> frozenset of signatures
    label_of: dict  # signature -> label


@lru_cache(maxsize=1)
def class_data():
    arith = _verified("takeuchi_arithmetic.json", "signatures")
    cls = _verified("commensurability_classes.json", "classes")
    sigs = frozenset(TriangleSignature.parse(s) for s in arith["signatures"])
    classes, label_of = {}, {}
    for c in cls["classes"]:
        members = frozenset(TriangleSignature.parse(s) for s in c["members"])
        classes[c["label"]] = members
        for s in members:
            if s in label_of:
                raise DataIntegrityError(f"{s} appears in two classes")
            label_of[s] = c["label"]
    if set(label_of) != sigs:
        raise DataIntegrityError("commensurability classes do not partition the arithmetic list")
    return TriangleClassData(sigs, classes, label_of)


def _sig(sig):
    if isinstance(sig, TriangleSignature):
        return sig
    if isinstance(sig, str):
        return TriangleSignature.parse(sig)
    return TriangleSignature(tuple(sig))


def is_arithmetic(sig):
    sig = _sig(sig)
    if not sig.is_hyperbolic():
        raise ValueError(f"{sig} is not a hyperbolic signature")
    return sig in class_data().arithmetic


def commensurability_class(sig):
    """Class label of an arithmetic signature, None otherwise."""
    return class_data().label_of.get(_sig(sig))


class Commensurability(Enum):
    COMMENSURABLE = "commensurable"
    NONCOMMENSURABLE = "noncommensurable"
    NOT_APPLICABLE = "not applicable"


@dataclass(frozen=True)
class CommensurabilityVerdict:
    verdict: Commensurability
    sig1: TriangleSignature
    sig2: TriangleSignature
    label1: str = None
    label2: str = None

    @property
    def noncommensurable(self):
        return self.verdict is Commensurability.NONCOMMENSURABLE

    def evidence(self):
        return {"sig1": str(self.sig1), "class1": self.label1, "sig2": str(self.sig2), "class2": self.label2}


def check_noncommensurable(sig1, sig2):
    s1, s2 = _sig(sig1), _sig(sig2)
    l1, l2 = commensurability_class(s1), commensurability_class(s2)
    if l1 is None or l2 is None:
        return CommensurabilityVerdict(Commensurability.NOT_APPLICABLE, s1, s2, l1, l2)
    v = Commensurability.COMMENSURABLE if l1 == l2 else Commensurability.NONCOMMENSURABLE
    return CommensurabilityVerdict(v, s1, s2, l1, l2)
