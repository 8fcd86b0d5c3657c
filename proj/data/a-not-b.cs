bound 6
level 1:
level 2: *2
deg 2 4: *4
deg 2 6: *6
level 3:
level 4: *4
level 5:
level 6: *6
