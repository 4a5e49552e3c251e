from rectpack.utils.commands.launch import main

main()
