"""Normal edge-colorings of cubic multipoles and Petersen-superedge superpositions."""

__version__ = "0.1.0"
