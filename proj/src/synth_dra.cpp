namespace rtsynth {}
