"""Full-separability criteria for tripartite quantum states."""
