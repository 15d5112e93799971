from .tileset import Tileset, check_coloring, full_tileset, proper_coloring
from .solver import (count_solutions, feasible_colours, feasible_restrictions,
                     is_satisfiable, iter_solutions, solve_finite)
