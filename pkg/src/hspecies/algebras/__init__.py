from .dqsym import DQSYM
from .eh import EH
from .faces import WORD3
from .lorder import LORDER, LORDER_DUAL
from .qsym import QSYM

REGISTRY = {
    A.name: A for A in (DQSYM, QSYM, WORD3, LORDER, LORDER_DUAL, EH)
}


def get_algebra(name: str):
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; choose from {', '.join(REGISTRY)}") from None


__all__ = ["REGISTRY", "get_algebra", "DQSYM", "QSYM", "WORD3", "LORDER", "LORDER_DUAL", "EH"]
