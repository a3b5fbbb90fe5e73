v 1/2
v -2
v 3
