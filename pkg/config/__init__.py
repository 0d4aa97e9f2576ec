# Settings classes and logging setup
