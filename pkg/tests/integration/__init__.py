# Cross-module certificate tests
