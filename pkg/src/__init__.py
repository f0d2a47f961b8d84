"""vclab: VC and fat-shattering bounds for linear control systems with trigonometric-polynomial inputs."""

__version__ = "0.1.0"
