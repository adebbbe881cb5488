from .chunks import *
