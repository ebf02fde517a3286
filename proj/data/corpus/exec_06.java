void x6(BuildException cmd) { }
