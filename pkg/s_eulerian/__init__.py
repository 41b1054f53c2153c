from . import constants
from . import miscellaneous
from . import polyx
from . import invseq
from . import eulerian
from . import groups
from . import geometry
from . import cli
