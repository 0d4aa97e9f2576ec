# Curvature service package
