from ordwqo.tree.labelled import LabelledTree, degree, enumerate_trees
from ordwqo.tree.embedding import EmbeddingChecker, embedding_matrix, embeds, embeds_oracle
from ordwqo.tree.whistle import Whistle
from ordwqo.tree.text import parse_tree, parse_trees, print_tree
