# Curvature toolkit sources
