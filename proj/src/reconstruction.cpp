namespace swlab {}
