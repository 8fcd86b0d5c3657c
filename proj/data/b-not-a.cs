bound 6
level 1: 0 1
deg 1 2: *2 *2
deg 1 3: *3 *3
deg 1 4: *4 *4
deg 1 5: *5 *5
deg 1 6: *6 *6
level 2: *2
deg 2 4: *4
deg 2 6: *6
level 3: *3
deg 3 6: *6
level 4: *4
level 5: *5
level 6: *6
