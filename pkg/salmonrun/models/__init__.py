from .resultmodels import *  # noqa
