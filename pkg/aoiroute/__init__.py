"""Age of Information of periodic patrol routes on weighted graphs."""
# Utils #
from aoiroute import rnd, validation

# Workers and base classes #
from aoiroute.boot.Boot import Boot
from aoiroute.boot.BootMode import BootMode
from aoiroute.config.Config import Config
from aoiroute.error.Error import Error
from aoiroute.log.Log import Log
from aoiroute.model.Model import Model
from aoiroute.proxy.BootProxy import BootProxy

# Graphs and routes #
from aoiroute.graph.build_graph import build_graph
from aoiroute.graph.Graph import Graph
from aoiroute.graph.MultiGraph import MultiGraph
from aoiroute.aoi.Route import Route
from aoiroute.aoi.average_aoi import average_aoi
from aoiroute.aoi.bounds import bounds
from aoiroute.aoi.simulate_aoi import simulate_aoi

# Planners #
from aoiroute.cpp.augment import AugmentKind, cpp_augment, duplicate_all
from aoiroute.cpp.scheme import cpp_scheme, dup_scheme
from aoiroute.heuristic import heuristic_route
from aoiroute.oracle import optimal_f1, verify_ratios
