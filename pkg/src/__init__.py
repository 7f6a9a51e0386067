# Source code
