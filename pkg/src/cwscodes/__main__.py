from cwscodes.cli import main

main()
