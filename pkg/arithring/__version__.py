__version__ = "0.4.0"
__name__ = "arithring"
__description__ = "Exact truncated arithmetic functions under Dirichlet convolution"
__url__ = "https://github.com/arithring/arithring"
__author__ = "arithring developers"
__authoremail__ = "arithring-dev@users.noreply.github.com"
__license__ = "The MIT License (MIT)"
__copyright__ = "Copyright 2024 arithring developers"
