"""Controllers rendering ctforge commands to the terminal."""
