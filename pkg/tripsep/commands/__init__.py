# Command groups package
